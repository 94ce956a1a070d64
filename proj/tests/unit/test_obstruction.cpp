#include <string>

#include "doctest.h"
#include "su3/obstruction.hpp"

using namespace su3;

namespace {

LieAlgebra rational_presentation(const std::string& spec) {
  const LieAlgebra alg = catalog_from_spec(spec);
  if (alg.is_rational()) return alg;
  const auto r = rationalize(alg);
  REQUIRE(r);
  return r->algebra;
}

}  // namespace

TEST_CASE("J~* on the flat model") {
  const Form rho = parse_form("e^{1,3,5} - e^{1,4,6} - e^{2,3,6} - e^{2,4,5}");
  // Proportional to J^* e^1, so it is a nonzero multiple of e^2.
  const Form image = jtilde_pullback(rho, basis_form({1}));
  CHECK(image.size() == 1);
  CHECK(image.terms().begin()->first == IndexWord::of({2}));
  CHECK_THROWS_AS(jtilde_pullback(basis_form({1, 2}), basis_form({1})), DegreeOverflow);
}

TEST_CASE("e^6 obstructs s12 across the parameter range") {
  for (const char* spec : {"s12,s=0,t=0", "s12,s=1,t=1", "s12,s=1/3,t=1/2", "s12,s=0,t=1", "s12,s=1/4,t=3/4",
                           "s12,s=1/2,t=1/2"}) {
    CAPTURE(spec);
    const ObstructionReport r = obstruction_test(rational_presentation(spec), basis_form({6}));
    CHECK(r.obstructed);
    CHECK(r.polynomial.is_zero());
    CHECK_FALSE(r.rho);
  }
}

TEST_CASE("su(2) + su(2) and the abelian algebra are not obstructed") {
  for (const char* spec : {"su2su2", "abelian"}) {
    CAPTURE(spec);
    const LieAlgebra alg = catalog(spec);
    for (int i = 1; i <= kDim; ++i) {
      const Form alpha = basis_form({i});
      const ObstructionReport r = obstruction_test(alg, alpha, 7);
      CHECK_FALSE(r.obstructed);
      REQUIRE(r.rho);
      REQUIRE(r.sigma);
      REQUIRE(r.value);
      // Re-verify the counterexample directly.
      CHECK(alg.d(*r.rho).is_zero());
      CHECK(alg.d(*r.sigma).is_zero());
      const Scalar v = top_coefficient(wedge(wedge(alpha, jtilde_pullback(*r.rho, alpha)), *r.sigma));
      CHECK(v == *r.value);
      CHECK_FALSE(is_zero(v));
    }
  }
}

TEST_CASE("closed form dimensions") {
  const ObstructionReport r = obstruction_test(catalog("su2su2"), basis_form({1}));
  CHECK(r.closed3_dim == 11);
  CHECK(r.closed4_dim == 9);  // exact 4-forms, since b4 = 0
  const ObstructionReport ab = obstruction_test(catalog("abelian"), basis_form({1}));
  CHECK(ab.closed3_dim == 20);
  CHECK(ab.closed4_dim == 15);
}

TEST_CASE("scans") {
  const auto found = obstruction_scan(rational_presentation("s12,s=1/3,t=1/2"));
  REQUIRE(found);
  CHECK(found->obstructed);
  CHECK_FALSE(obstruction_scan(catalog("su2su2")));
  CHECK(default_alpha_candidates().size() == 6 + 15 + 15);
  CHECK(default_alpha_candidates().front() == basis_form({1}));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(obstruction_test(catalog("su2su2"), Form(1)), ParamOutOfRange);
  CHECK_THROWS_AS(obstruction_test(catalog("s13"), basis_form({1})), InexactScalars);
  CHECK_THROWS_AS(obstruction_test(catalog("su2su2"), Scalar(Surd::term(1, 2)) * basis_form({1})), InexactScalars);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const LieAlgebra su = catalog("su2su2");
  CHECK(format_obstruction(obstruction_test(su, basis_form({2}), 3)) ==
        format_obstruction(obstruction_test(su, basis_form({2}), 3)));
  const std::string text = format_obstruction(obstruction_test(rational_presentation("s12"), basis_form({6})));
  CHECK(text.find("obstructed: true") != std::string::npos);
}
