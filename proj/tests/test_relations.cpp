#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace odpn;
using tst::P;

TEST_CASE("indexed reflection steps", "[relations]") {
  CHECK(precI(3, tst::dqBase(), pi()));
  CHECK_FALSE(precI(3, pi(), pi()));
  CHECK(preceqI(2, omega(), omega()));
  CHECK(preceqI(2, tst::dqBase(), tst::dqBase()));
}

TEST_CASE("pi ancestors", "[relations]") {
  Ref r1 = tst::dqBase();
  CHECK(alphaPi(r1) == r1);
  Ref d2 = rawD(r1, {Quad{2, r1, r1, zero()}}, zero());
  CHECK(alphaPi(d2) == r1);
}

TEST_CASE("indexed chains are finite and linearly ordered", "[relations]") {
  auto const& u = tst::carrierPiN7();
  for (Ref s : u) {
    if (!inDQ(s)) continue;
    for (int i = 2; i <= 3; ++i) {
      auto ch = chainI(i, s);
      // Strictly ascending along prec_i, no repeats.
      for (size_t k = 1; k < ch.size(); ++k) {
        CHECK(precI(i, ch[k - 1], ch[k]));
        CHECK(ch[k - 1] != ch[k]);
      }
    }
  }
}

TEST_CASE("deeper index steps imply shallower ones", "[relations]") {
  auto const& u = tst::carrierPiN7();
  for (Ref a : u) {
    if (!inDQ(a)) continue;
    for (Ref b : u) {
      if (precI(3, a, b)) CHECK(precI(2, a, b));
    }
  }
}

TEST_CASE("resolvent sequence of the base term", "[relations]") {
  Ref r1 = tst::dqBase();
  // In = {3}: nothing at level 2 precedes it, so the sequence collapses to
  // its pi-chain element.
  DecompSeq s = decompSeq(2, r1);
  CHECK(s.lh() == 1);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0] == alphaPi(r1));

  DecompSeq s3 = decompSeq(3, r1);
  CHECK(s3.lh() >= 1);
  CHECK(s3.entries.back() == alphaPi(r1));
}

TEST_CASE("guarded neighbor relations need index data", "[relations]") {
  Ref r1 = tst::dqBase();
  // rg_2 is undefined on the base term, so level-2 neighbors are refused.
  CHECK(rgI(2, r1) == nullptr);
  CHECK_FALSE(lhd(2, r1, pi()));
  CHECK_FALSE(lhdUp(2, r1, pi()));
}

TEST_CASE("neighbor relations stay inside the guard", "[relations]") {
  auto const& u = tst::carrierPiN7();
  for (Ref a : u) {
    if (!inDQ(a)) continue;
    for (Ref b : u) {
      if (lhd(2, a, b) || lhd(3, a, b)) {
        bool guarded = false;
        for (int i : inSet(a)) guarded = guarded || (lhd(i, a, b) && rgI(i, a));
        CHECK(guarded);
      }
    }
  }
}

TEST_CASE("m32 neighbor relation on its fragment", "[relations]") {
  Params p = tst::m32();
  auto const& u = tst::carrierM328();
  for (Ref a : u) {
    if (!inDQ(a)) continue;
    CHECK_FALSE(lhdM32(a, a));
    for (Ref b : u) {
      if (lhdM32(a, b)) {
        CHECK(inDQ(a));
        CHECK(lt(a, b));
      }
    }
  }
  (void)p;
}
