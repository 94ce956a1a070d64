#include "doctest.h"
#include "fixtures.hpp"
#include "su3/torsion.hpp"

using namespace su3;
using test::Pair;

TEST_CASE("class names") {
  CHECK(to_string(TorsionClass::NearlyKahler) == "NearlyKahler");
  CHECK(to_string(TorsionClass::HalfFlatGeneric) == "HalfFlatGeneric");
}

TEST_CASE("flat model on the abelian algebra is torsion free") {
  const Pair flat = test::flat_model();
  const TorsionData t = classify(catalog("abelian"), flat.omega, flat.psi);
  CHECK(t.torsion_class == TorsionClass::TorsionFree);
  CHECK(is_zero(t.w1));
  CHECK(t.w2.is_zero());
  CHECK(t.w3.is_zero());
}

TEST_CASE("flat model on su(2) + su(2) is not half-flat") {
  const Pair flat = test::flat_model();
  const LieAlgebra su = catalog("su2su2");
  CHECK_FALSE(is_half_flat(su, flat.omega, flat.psi));
  CHECK(classify(su, flat.omega, flat.psi).torsion_class == TorsionClass::NotHalfFlat);
}

TEST_CASE("double example") {
  const Pair p = test::example_double();
  const LieAlgebra su = catalog("su2su2");
  CHECK(is_half_flat(su, p.omega, p.psi));
  const TorsionData t = classify(su, p.omega, p.psi);
  CHECK(t.torsion_class == TorsionClass::Double);
  REQUIRE(t.double_constant);
  CHECK(*t.double_constant == Scalar(Surd::term(Rational(1, 2), 2)));
  CHECK_FALSE(t.coupled_constant);
}

TEST_CASE("nearly Kaehler example") {
  const Pair p = test::example_nearly_kahler();
  const LieAlgebra su = catalog("su2su2");
  const TorsionData t = classify(su, p.omega, p.psi);
  CHECK(t.torsion_class == TorsionClass::NearlyKahler);
  CHECK(t.w1 == Scalar(-2));
  CHECK(t.w2.is_zero());
  CHECK(t.w3.is_zero());
  REQUIRE(t.coupled_constant);
  CHECK(*t.coupled_constant == Scalar(3));
  REQUIRE(t.double_constant);
  CHECK(*t.double_constant == Scalar(-2));
  CHECK(su.d(p.omega) == Scalar(3) * p.psi);
  CHECK(su.d(psi_minus(p.psi)) == Scalar(-2) * wedge(p.omega, p.omega));
}

TEST_CASE("half-flat example is neither coupled nor double") {
  const Pair p = test::example_half_flat();
  const TorsionData t = classify(catalog("su2su2"), p.omega, p.psi);
  CHECK(t.torsion_class == TorsionClass::HalfFlatGeneric);
  CHECK_FALSE(t.coupled_constant);
  CHECK_FALSE(t.double_constant);
}

TEST_CASE("coupled example") {
  const Pair p = test::example_coupled();
  const LieAlgebra su = catalog("su2su2");
  const TorsionData t = classify(su, p.omega, p.psi);
  CHECK(t.torsion_class == TorsionClass::Coupled);
  REQUIRE(t.coupled_constant);
  CHECK(approx_equal(*t.coupled_constant * test::fourth_root_3(), Scalar(1), BigFloat::pow10(-30, 64)));
  CHECK(negligible(p.psi - test::fourth_root_3() * su.d(p.omega)));
  CHECK_FALSE(t.double_constant);
  CHECK_FALSE(negligible(t.w2));
  CHECK(negligible(t.w3));
}

TEST_CASE("negligible thresholds") {
  CHECK(negligible(Scalar(BigFloat::pow10(-35, 64))));
  CHECK_FALSE(negligible(Scalar(BigFloat::pow10(-25, 64))));
  CHECK_FALSE(negligible(Scalar(Surd::term(Rational(1, 1000000), 2))));
  CHECK(negligible(Form(3)));
}

TEST_CASE("inconsistent torsion input is rejected") {
  // omega ^ psi_minus = 0 forces both w1 extractions to agree, so only an
  // incompatible pair on a non-unimodular algebra can trip the check.
  const Pair flat = test::flat_model();
  CHECK_NOTHROW(torsion_forms(catalog("a6_99"), flat.omega, flat.psi));
  CHECK_THROWS_AS(torsion_forms(catalog("a6_99"), parse_form("e^{1,4} + e^{2,5} + e^{3,6}"), flat.psi),
                  InconsistentTorsion);
}
