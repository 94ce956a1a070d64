#include "doctest.h"
#include "fixtures.hpp"
#include "su3/hitchin.hpp"

using namespace su3;
using test::Pair;

namespace {

/// H = k * M for some scalar k, entrywise within the zero tolerance.
bool proportional(const ScalarMatrix& h, const ScalarMatrix& m, const BigFloat& tol) {
  const Scalar k = h(0, 0) / m(0, 0);
  return approx_equal(h, k * m, tol);
}

}  // namespace

TEST_CASE("flat model") {
  const Pair flat = test::flat_model();
  CHECK(lambda(flat.psi) == Scalar(-4));
  const SU3Structure s = validate(flat.omega, flat.psi);
  CHECK(s.valid());
  CHECK(s.metric() == ScalarMatrix::identity(kDim));
  const ScalarMatrix j = s.j();
  CHECK(j * j == Scalar(-1) * ScalarMatrix::identity(kDim));
  CHECK(s.psi_minus() == parse_form("e^{1,3,6} + e^{1,4,5} + e^{2,3,5} - e^{2,4,6}"));
  CHECK(wedge(flat.psi, s.psi_minus()) == Scalar(Rational(2, 3)) * wedge(flat.omega, wedge(flat.omega, flat.omega)));
}

TEST_CASE("K squares to lambda") {
  const Pair flat = test::flat_model();
  const ScalarMatrix k = k_endo(flat.psi);
  CHECK(k * k == Scalar(-4) * ScalarMatrix::identity(kDim));
  CHECK(scaled_metric(flat.omega, flat.psi) == Scalar(2) * ScalarMatrix::identity(kDim));
}

TEST_CASE("evaluation of 3-forms") {
  const Form rho = basis_form({1, 2, 3});
  ScalarVector e1(kDim, Scalar(0)), e2(kDim, Scalar(0)), e3(kDim, Scalar(0));
  e1[0] = e2[1] = e3[2] = Scalar(1);
  CHECK(evaluate3(rho, e1, e2, e3) == Scalar(1));
  CHECK(evaluate3(rho, e2, e1, e3) == Scalar(-1));
  CHECK(evaluate3(rho, e1, e1, e3) == Scalar(0));
}

TEST_CASE("double example on su(2) + su(2)") {
  const Pair p = test::example_double();
  const SU3Structure s = validate(p.omega, p.psi);
  const StructureFlags f = s.flags();
  CHECK(f.stable2);
  CHECK(f.stable3);
  CHECK(f.lambda_negative);
  CHECK(f.compatible);
  CHECK(f.normalized);
  CHECK(f.metric_positive);
  CHECK(s.metric() == ScalarMatrix::identity(kDim));
  CHECK(metric_wedge(p.omega, p.psi) == ScalarMatrix::identity(kDim));
}

TEST_CASE("nearly Kaehler example induces the Jensen metric") {
  const Pair p = test::example_nearly_kahler();
  const SU3Structure s = validate(p.omega, p.psi);
  CHECK(s.valid());
  CHECK(proportional(s.metric(), jensen_metric(), zero_tolerance(64)));
  CHECK(sign(s.metric()(0, 0)) > 0);
}

TEST_CASE("half-flat example induces the Jensen metric within float tolerance") {
  const Pair p = test::example_half_flat();
  const SU3Structure s = validate(p.omega, p.psi);
  CHECK(s.valid());
  CHECK(s.metric()(0, 0).inexact());
  CHECK(proportional(s.metric(), jensen_metric(), BigFloat::pow10(-30, 64)));
  CHECK(approx_equal(s.metric(), metric_wedge(p.omega, p.psi), BigFloat::pow10(-30, 64)));
}

TEST_CASE("invalid pairs land in the flags") {
  const Pair flat = test::flat_model();
  const SU3Structure degenerate = validate(basis_form({1, 2}), flat.psi);
  CHECK_FALSE(degenerate.flags().stable2);
  CHECK_FALSE(degenerate.valid());
  CHECK_THROWS_AS(metric_wedge(basis_form({1, 2}), flat.psi), Degenerate2Form);

  const Form split = basis_form({1, 2, 3}) + basis_form({4, 5, 6});
  CHECK(sign(lambda(split)) > 0);
  CHECK_THROWS_AS(almost_complex(split), WrongOrientation);
  CHECK_FALSE(validate(flat.omega, split).flags().lambda_negative);

  const Form decomposable = basis_form({1, 2, 3});
  CHECK(is_zero(lambda(decomposable)));
  CHECK_THROWS_AS(almost_complex(decomposable), NotStable);
  CHECK_FALSE(validate(flat.omega, decomposable).flags().stable3);

  const Form rescaled = Scalar(2) * flat.psi;
  const SU3Structure unnormalized = validate(flat.omega, rescaled);
  CHECK(unnormalized.flags().compatible);
  CHECK_FALSE(unnormalized.flags().normalized);

  const SU3Structure reversed = validate(Scalar(-1) * flat.omega, flat.psi);
  CHECK_FALSE(reversed.flags().metric_positive);
}

TEST_CASE("incompatible pair") {
  const Pair flat = test::flat_model();
  const Form omega = flat.omega + basis_form({1, 3});
  CHECK_FALSE(validate(omega, flat.psi).flags().compatible);
}

TEST_CASE("structures share their cache across copies") {
  const Pair flat = test::flat_model();
  const SU3Structure a = validate(flat.omega, flat.psi);
  const SU3Structure b = a;
  CHECK(&a.metric() == &b.metric());
}
