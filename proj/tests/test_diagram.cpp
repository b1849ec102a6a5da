#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace odpn;
using tst::P;

TEST_CASE("atoms and interning", "[diagram]") {
  CHECK(zero() == zero());
  CHECK(omega() != pi());
  CHECK(P("d(Om;;0)") == P("d(Om;;0)"));
  CHECK(P("d(Om;;0)") != P("d(Om;;Om)"));
  CHECK(natural(2) == P("2"));
  CHECK(natural(1) == P("phi(0,0)"));
}

TEST_CASE("classification of the core shapes", "[diagram]") {
  CHECK(classify(zero()) == Class::ZeroClass);
  CHECK(classify(P("d(Om;;0)")) == Class::SC);
  CHECK(classify(tst::dqBase()) == Class::R_DQ);
  CHECK(classify(pi()) == Class::R_Pi);
  CHECK(classify(omega()) == Class::R_SR);
  CHECK(classify(P("phi(0,0)")) == Class::P);
  CHECK(classify(P("phi(0,0)+phi(0,0)")) == Class::SumClass);
  CHECK(classify(P("suc(d(pi;[3,pi,pi,0];0),1)")) == Class::R_SR);
}

TEST_CASE("membership shorthands", "[diagram]") {
  CHECK(inDQ(tst::dqBase()));
  CHECK_FALSE(inDQ(P("d(Om;;0)")));
  CHECK(inSC(P("d(Om;;0)")));
  CHECK(isD(P("d(Om;;0)")));
  CHECK(inR(pi()));
  CHECK(inR(omega()));
  CHECK(inR(tst::dqBase()));
  CHECK_FALSE(inR(P("d(Om;;0)")));
  CHECK_FALSE(inR(P("phi(0,0)")));
}

TEST_CASE("body, quads, and c-parts", "[diagram]") {
  Ref t = P("d(pi;[3,pi,pi,0];Om)");
  CHECK(bodyOf(t) == omega());
  CHECK(P("d(Om;;0)")->quads.empty());
  CHECK(bodyOf(P("d(Om;;0)")) == zero());
  REQUIRE(t->quads.size() == 1);
  CHECK(t->quads[0].j == 3);
  CHECK(t->quads[0].kappa == pi());
  CHECK(t->quads[0].tau == pi());
  CHECK(t->quads[0].nu == zero());
}

TEST_CASE("indexed accessors on the base quadruple term", "[diagram]") {
  Ref r = tst::dqBase();
  CHECK(stI(3, r) == zero());
  CHECK(rgI(3, r) == pi());
  CHECK(pdI(3, r) == pi());
  CHECK(inSet(r) == std::vector<int>{3});
  CHECK(inIn(3, r));

  // Below the carried index: pd_2 = pi is inherited, st_2/rg_2 are not.
  CHECK(pdI(2, r) == pi());
  CHECK(stI(2, r) == nullptr);
  CHECK(rgI(2, r) == nullptr);
  CHECK_FALSE(inIn(2, r));
}

TEST_CASE("In lists every quad index", "[diagram]") {
  Ref r1 = tst::dqBase();
  Ref t = rawD(r1, {Quad{2, r1, r1, zero()}, Quad{3, pi(), r1, zero()}},
               zero());
  CHECK(inSet(t) == std::vector<int>{2, 3});
}

TEST_CASE("symbol counts", "[diagram]") {
  CHECK(ellSize(zero()) == 1);
  CHECK(ellSize(P("d(Om;;0)")) == 3);
  CHECK(ellSize(P("phi(0,0)")) == 3);
  // suc(b,k) counts as k successor symbols plus the base.
  Ref r = tst::dqBase();
  CHECK(ellSize(rawSuc(r, 2)) == ellSize(r) + 2);
  // quads: the integer j is one symbol.
  CHECK(ellSize(tst::dqBase()) == 1 + 1 + (1 + 1 + 1 + 1) + 1);
}

TEST_CASE("subdiagram sets", "[diagram]") {
  CHECK(sd(zero()).empty());
  auto s = sd(P("phi(0,Om)"));
  REQUIRE(s.size() == 2);
  CHECK((s[0] == zero() || s[1] == zero()));
  CHECK((s[0] == omega() || s[1] == omega()));

  auto sq = sd(tst::dqBase());
  CHECK(std::count(sq.begin(), sq.end(), pi()) == 1);

  auto sp = sdPlus(tst::dqBase());
  CHECK(std::count(sp.begin(), sp.end(), tst::dqBase()) == 1);
}

TEST_CASE("sum normalization", "[diagram]") {
  // Left addends strictly below the right component are absorbed.
  CHECK(mkPlus(P("phi(0,0)"), omega()) == omega());
  CHECK(mkPlus(omega(), P("phi(0,0)")) == P("Om+phi(0,0)"));
  // Components stay non-increasing and additive principal.
  Ref s = P("Om+Om+phi(0,0)");
  REQUIRE(s->comps.size() == 3);
  CHECK(lt(s->comps[2], s->comps[1]));
  CHECK(leq(s->comps[1], s->comps[0]));
  // Flattening: a sum never stores a sum component.
  for (Ref c : s->comps) CHECK(c->tag != Tag::Sum);
}

TEST_CASE("veblen normalization", "[diagram]") {
  // Strict absorption on the second argument.
  CHECK(mkVeblen(zero(), P("phi(Om,0)")) == P("phi(Om,0)"));
  CHECK(mkVeblen(omega(), P("phi(Om,0)")) == P("phi(Om,phi(Om,0))"));
  // omega = phi(0, 1) stays representable.
  Ref w = mkVeblen(zero(), natural(1));
  CHECK(w->tag == Tag::Veblen);
}

TEST_CASE("stored invariants across a fragment", "[diagram]") {
  for (Ref t : tst::carrierPiN6()) {
    if (t->tag == Tag::Sum) {
      REQUIRE(t->comps.size() >= 2);
      for (size_t i = 1; i < t->comps.size(); ++i)
        CHECK(leq(t->comps[i], t->comps[i - 1]));
      for (Ref c : t->comps) {
        CHECK(c->tag != Tag::Sum);
        auto cl = classify(c);
        CHECK((cl == Class::P || cl == Class::SC || inR(c)));
      }
    }
    if (t->tag == Tag::Veblen) {
      Ref b = t->b;
      bool absorbable = b->tag == Tag::Veblen && leq(t->a, b->a);
      CHECK_FALSE(absorbable);
    }
  }
}
