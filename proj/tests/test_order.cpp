#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace odpn;
using tst::P;

TEST_CASE("pinned comparisons", "[order]") {
  CHECK(compare(zero(), omega()) == Ordering::Less);
  CHECK(compare(P("d(Om;;0)"), omega()) == Ordering::Less);
  CHECK(compare(P("phi(0,0)"), P("phi(0,0)+phi(0,0)")) == Ordering::Less);
  CHECK(compare(omega(), tst::dqBase()) == Ordering::Less);
  CHECK(compare(pi(), pi()) == Ordering::Equal);
  CHECK(compare(pi(), zero()) == Ordering::Greater);
}

TEST_CASE("d-terms sit below their subscript", "[order]") {
  for (Ref t : tst::carrierPiN7()) {
    if (t->tag == Tag::D) CHECK(lt(t, t->a));
  }
}

TEST_CASE("strata", "[order]") {
  // Omega above everything d_Omega-generated, below D^Q and pi.
  CHECK(lt(P("d(Om;;pi)"), omega()));
  CHECK(lt(P("d(Om;;d(Om;;Om))"), omega()));
  CHECK(lt(omega(), tst::dqBase()));
  CHECK(lt(tst::dqBase(), pi()));
  // pi tops every core term in the fragment.
  for (Ref t : tst::carrierPiN7()) CHECK(leq(t, pi()));
}

TEST_CASE("same-subscript comparison is body first", "[order]") {
  CHECK(lt(P("d(Om;;0)"), P("d(Om;;Om)")));
  CHECK(lt(P("d(Om;;d(Om;;pi))"), P("d(Om;;Om)")));
  CHECK(lt(P("d(pi;[3,pi,pi,0];0)"), P("d(pi;[3,pi,pi,0];Om)")));
}

TEST_CASE("total order on a fragment", "[order]") {
  auto const& u = tst::carrierPiN6();
  for (Ref a : u) {
    CHECK(compare(a, a) == Ordering::Equal);
    for (Ref b : u) {
      Ordering ab = compare(a, b);
      Ordering ba = compare(b, a);
      if (a == b) {
        CHECK(ab == Ordering::Equal);
      } else {
        CHECK(ab != Ordering::Equal);
        CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
      }
    }
  }
  // Transitivity over all triples.
  for (Ref a : u)
    for (Ref b : u)
      for (Ref c : u)
        if (lt(a, b) && lt(b, c)) CHECK(lt(a, c));
}

TEST_CASE("successor steps", "[order]") {
  Ref r = tst::dqBase();
  CHECK(lt(r, rawSuc(r, 1)));
  CHECK(lt(rawSuc(r, 1), rawSuc(r, 2)));
  CHECK(lt(rawSuc(r, 1), pi()));
}

TEST_CASE("one-step reflection relation", "[order]") {
  CHECK(precDot(tst::dqBase(), pi()));
  CHECK_FALSE(precDot(pi(), pi()));
  // Two steps through a D_pi member's own collapse.
  Ref r1 = tst::dqBase();
  Ref d2 = rawD(r1, {Quad{2, r1, r1, zero()}}, zero());
  CHECK(precDot(d2, pi()));
  CHECK(preceqDot(pi(), pi()));
}

TEST_CASE("k-sets", "[order]") {
  CHECK(kSigma(omega(), P("d(Om;;0)")) == std::vector<Ref>{P("d(Om;;0)")});
  CHECK(kSigma(pi(), omega()).empty());
  CHECK(kSigma(pi(), P("d(Om;;0)")).empty());
}

TEST_CASE("set order conventions", "[order]") {
  std::vector<Ref> empty;
  std::vector<Ref> justZero{zero()};
  std::vector<Ref> justOm{omega()};
  // Y < beta is vacuous for empty Y; max of nothing is 0.
  CHECK(allLt(empty, zero()));
  CHECK(maxOf(empty) == zero());
  // Z <= Y needs a bounding witness in Y for every member of Z.
  CHECK(setLeqSet(empty, empty));
  CHECK(setLeqSet(empty, justZero));
  CHECK_FALSE(setLeqSet(justZero, empty));
  CHECK(setLeqSet(justZero, justOm));
  CHECK_FALSE(setLeqSet(justOm, justZero));
  // Y < Z needs a single member of Z above all of Y.
  CHECK(setLtSet(justZero, justOm));
  CHECK_FALSE(setLtSet(justOm, justOm));
}

TEST_CASE("k-set bound lemma on a fragment", "[order]") {
  // K_sigma(alpha) <= alpha, with sigma ranging over the carrier.
  auto const& u = tst::carrierPiN6();
  for (Ref sigma : u) {
    if (!inR(sigma)) continue;
    for (Ref alpha : u) {
      CHECK(setLeqSet(kSigma(sigma, alpha), {alpha}));
    }
  }
}
