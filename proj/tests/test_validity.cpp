#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"

using namespace odpn;
using tst::P;

namespace {

bool hasClause(ValidityReport const& r, std::string const& c) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](Violation const& v) { return v.clause == c; });
}

}  // namespace

TEST_CASE("valid base terms per system", "[validity]") {
  CHECK(isValid(tst::odSuper(), P("d(Om;;0)")));
  CHECK(isValid(tst::odSuper(), P("d(Om;;Om)")));
  CHECK(isValid(tst::odSuper(), P("d(Om;;d(Om;;0))")));
  CHECK(isValid(tst::odSuper(), pi()));
  CHECK(isValid(tst::m32(), P("d(pi;[2,pi,pi,0];0)")));
  CHECK(isValid(tst::piN(), tst::dqBase()));
  CHECK(isValid(tst::piN(), rawSuc(tst::dqBase(), 1)));
}

TEST_CASE("collapse body bound", "[validity]") {
  // The subscript r1 = d(pi;...) sits below its own subscript pi, so the
  // strict exposure set of any scope containing r1 holds r1's body 0;
  // a zero body then fails the bound 0 < 0.
  Ref r1 = tst::dqBase();
  Ref bad = rawD(r1, {Quad{2, r1, r1, zero()}, Quad{3, pi(), r1, zero()}},
                 zero());
  auto rep = validate(tst::piN(), bad);
  CHECK_FALSE(rep.valid);
  CHECK(hasClause(rep, "OdMu"));

  // Same shape with body Om clears the bound but trips the predecessor
  // distinctness requirement instead: pd_2 = pd_3 = r1.
  Ref dup = rawD(r1, {Quad{2, r1, r1, zero()}, Quad{3, pi(), r1, zero()}},
                 omega());
  auto rep2 = validate(tst::piN(), dup);
  CHECK_FALSE(rep2.valid);
  CHECK(hasClause(rep2, "D11"));
  CHECK_FALSE(hasClause(rep2, "OdMu"));
}

TEST_CASE("exposure is strict above the subscript", "[validity]") {
  // d(Om;;d(Om;;pi)): the inner collapse sits at the subscript level
  // itself, so nothing is exposed strictly above Om and the term stands.
  CHECK(isValid(tst::piN(), P("d(Om;;d(Om;;pi))")));
  CHECK(isValid(tst::piN(), P("d(Om;;Om)")));
  CHECK(isValid(tst::odSuper(), P("d(Om;;d(Om;;pi))")));
}

TEST_CASE("quad index discipline", "[validity]") {
  auto repLow = validate(tst::piN(), P("d(pi;[2,pi,pi,0];0)"));
  CHECK_FALSE(repLow.valid);
  CHECK(hasClause(repLow, "JMonotone"));

  Ref r1 = tst::dqBase();
  auto repDesc = validate(
      tst::piN(),
      rawD(pi(), {Quad{3, pi(), pi(), zero()}, Quad{2, pi(), pi(), zero()}},
           zero()));
  CHECK_FALSE(repDesc.valid);
  CHECK(hasClause(repDesc, "JMonotone"));
  (void)r1;

  // The three-level system takes exactly one quad at index 2.
  auto repM = validate(tst::m32(), tst::dqBase());
  CHECK_FALSE(repM.valid);
  CHECK(hasClause(repM, "TauShape"));
}

TEST_CASE("stage bounds at the top level", "[validity]") {
  auto repPi = validate(tst::piN(), P("d(pi;[3,pi,pi,Om];0)"));
  CHECK_FALSE(repPi.valid);
  CHECK(hasClause(repPi, "NuBound"));

  auto repM = validate(tst::m32(), P("d(pi;[2,pi,pi,Om];0)"));
  CHECK_FALSE(repM.valid);
  CHECK(hasClause(repM, "StBound32Pi"));
}

TEST_CASE("stage growth along the chain", "[validity]") {
  // rho under eta with equal stages: the walk toward pi demands strict
  // growth, so st_2(rho) = st_2(eta) = 0 is refused, and nothing else is.
  auto rep = validate(
      tst::m32(),
      P("d(d(pi;[2,pi,pi,0];0);[2,pi,d(pi;[2,pi,pi,0];0),0];Om)"));
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].clause == "Case1M32");
}

TEST_CASE("plain collapse shape in the base system", "[validity]") {
  auto repSuc = validate(tst::odSuper(), rawSuc(P("d(Om;;0)"), 1));
  CHECK_FALSE(repSuc.valid);
  CHECK(hasClause(repSuc, "TauShape"));

  auto repPi = validate(tst::odSuper(), P("d(pi;;pi)"));
  CHECK_FALSE(repPi.valid);
  CHECK(hasClause(repPi, "TauShape"));
}

TEST_CASE("range condition cases at the top quad", "[validity]") {
  auto rep = validate(tst::piN(), tst::dqBase());
  CHECK(rep.valid);
  REQUIRE(rep.d12Subcase.count(3) == 1);
  CHECK(rep.d12Subcase.at(3) == 1);

  auto prof = d12Profile(tst::dqBase(), 3);
  CHECK(prof[0]);
  CHECK_FALSE(prof[1]);
  CHECK_FALSE(prof[2]);

  auto repM = validate(tst::m32(), P("d(pi;[2,pi,pi,0];0)"));
  CHECK(repM.valid);
  REQUIRE(repM.d12Subcase.count(2) == 1);
  CHECK(repM.d12Subcase.at(2) == 1);

  CHECK(d12Profile(pi(), 2) == std::array<bool, 3>{false, false, false});
}

TEST_CASE("carrier members validate cleanly", "[validity]") {
  for (Ref x : tst::carrierPiN6()) {
    auto rep = validate(tst::piN(), x);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
  }
  for (Ref x : tst::carrierM328()) CHECK(isValid(tst::m32(), x));
  for (Ref x : tst::carrierOd6()) CHECK(isValid(tst::odSuper(), x));
}
