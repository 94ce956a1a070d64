#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "su3/liealg.hpp"

using namespace su3;
using oracle::Alt;
using oracle::Rat;
using oracle::Real;

namespace {

Rat to_rat(const Scalar& s) {
  const Rational q = s.rational();
  return Rat(boost::multiprecision::cpp_int(q.get_num().get_str()),
             boost::multiprecision::cpp_int(q.get_den().get_str()));
}

Real to_real(const Scalar& s) { return Real(s.to_float(80).to_string(60)); }

template <class T, class Convert>
Alt<T> to_alt(const Form& f, Convert convert) {
  Alt<T> out(f.degree());
  for (const auto& [w, c] : f.terms()) {
    oracle::Indices idx;
    for (int i : w.indices()) idx.push_back(i - 1);
    out.set_sorted(idx, convert(c));
  }
  return out;
}

template <class T, class Convert>
std::array<Alt<T>, kDim> differentials(const LieAlgebra& alg, Convert convert) {
  return {to_alt<T>(alg.de(1), convert), to_alt<T>(alg.de(2), convert), to_alt<T>(alg.de(3), convert),
          to_alt<T>(alg.de(4), convert), to_alt<T>(alg.de(5), convert), to_alt<T>(alg.de(6), convert)};
}

bool same_exact(const Alt<Rat>& a, const Form& f) { return a.sorted() == to_alt<Rat>(f, to_rat).sorted(); }

bool same_float(const Alt<Real>& a, const Form& f, const Real& tol) {
  const Alt<Real> b = to_alt<Real>(f, to_real);
  for (const auto& idx : oracle::increasing_tuples(a.degree())) {
    if (abs(a.at(idx) - b.at(idx)) > tol) return false;
  }
  return true;
}

const std::vector<std::string> kTableSpecs = {
    "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9",
    "s10,t=0", "s10,t=branch", "s10,t=max", "s11",
    "s12,s=0,t=0", "s12,s=1,t=1", "s12,s=1/3,t=1/2", "s13"};

}  // namespace

TEST_CASE("oracle permutation tables") {
  CHECK(oracle::permutations(3).size() == 6);
  CHECK(oracle::increasing_tuples(3).size() == 20);
  CHECK(oracle::sort_sign({1, 0, 2}) == -1);
  CHECK(oracle::sort_sign({1, 1}) == 0);
}

TEST_CASE("wedge agrees with the permutation-sum definition") {
  test::Rng rng(test::test_seed());
  for (int t = 0; t < 60; ++t) {
    const int k = static_cast<int>(rng.integer(0, 3));
    const int l = static_cast<int>(rng.integer(0, kDim - k));
    const Form a = test::random_form(rng, k), b = test::random_form(rng, l);
    CHECK(same_exact(oracle::wedge(to_alt<Rat>(a, to_rat), to_alt<Rat>(b, to_rat)), wedge(a, b)));
  }
}

TEST_CASE("d agrees with the bracket formula on rational algebras") {
  for (const char* spec : {"su2su2", "a6_99", "abelian"}) {
    CAPTURE(spec);
    const LieAlgebra alg = catalog(spec);
    const auto c = oracle::brackets_from_differentials(differentials<Rat>(alg, to_rat));
    for (int k = 1; k < kDim; ++k) {
      for (const auto& w : words_of_degree(k)) {
        const Form f = Form::basis(w);
        CHECK(same_exact(oracle::d(c, to_alt<Rat>(f, to_rat)), alg.d(f)));
      }
    }
  }
  const auto rat = rationalize(catalog_from_spec("s12,s=1/3,t=1/2"));
  REQUIRE(rat);
  const auto c = oracle::brackets_from_differentials(differentials<Rat>(rat->algebra, to_rat));
  test::Rng rng(test::test_seed() + 10);
  for (int t = 0; t < 20; ++t) {
    const Form f = test::random_form(rng, static_cast<int>(rng.integer(1, 4)));
    CHECK(same_exact(oracle::d(c, to_alt<Rat>(f, to_rat)), rat->algebra.d(f)));
  }
}

TEST_CASE("d agrees with the bracket formula on surd algebras") {
  const Real tol("1e-40");
  for (const auto& spec : kTableSpecs) {
    CAPTURE(spec);
    const LieAlgebra alg = catalog_from_spec(spec);
    const auto c = oracle::brackets_from_differentials(differentials<Real>(alg, to_real));
    for (int k = 1; k <= 3; ++k) {
      for (const auto& w : words_of_degree(k)) {
        const Form f = Form::basis(w);
        CHECK(same_float(oracle::d(c, to_alt<Real>(f, to_real)), alg.d(f), tol));
      }
    }
  }
}

TEST_CASE("oracle d squares to zero on the catalog") {
  const Real tol("1e-40");
  for (const auto& spec : kTableSpecs) {
    CAPTURE(spec);
    const auto c = oracle::brackets_from_differentials(differentials<Real>(catalog_from_spec(spec), to_real));
    for (const auto& idx : oracle::increasing_tuples(1)) {
      Alt<Real> e(1);
      e.set_sorted(idx, Real(1));
      const Alt<Real> dd = oracle::d(c, oracle::d(c, e));
      for (const auto& w : oracle::increasing_tuples(3)) CHECK(abs(dd.at(w)) < tol);
    }
  }
}

TEST_CASE("lambda agrees with the Levi-Civita contraction") {
  test::Rng rng(test::test_seed() + 20);
  const test::Pair flat = test::flat_model();
  CHECK(oracle::hitchin_lambda(to_alt<Rat>(flat.psi, to_rat)) == Rat(-4));
  for (int t = 0; t < 25; ++t) {
    const Form rho = test::random_form(rng, 3, 50);
    CHECK(oracle::hitchin_lambda(to_alt<Rat>(rho, to_rat)) == to_rat(lambda(rho)));
  }
}

TEST_CASE("Ricci agrees with the Besse formula") {
  const LieAlgebra su = catalog("su2su2");
  const auto exact = oracle::ricci_orthonormal(oracle::brackets_from_differentials(differentials<Rat>(su, to_rat)));
  const ScalarMatrix core = ricci(su, ScalarMatrix::identity(kDim));
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) CHECK(exact[i][j] == to_rat(core(i, j)));
  }
  CHECK(exact[0][0] == Rat(1, 2));

  const Real tol("1e-30");
  for (const auto& spec : kTableSpecs) {
    CAPTURE(spec);
    const LieAlgebra alg = catalog_from_spec(spec);
    const auto ric = oracle::ricci_orthonormal(oracle::brackets_from_differentials(differentials<Real>(alg, to_real)));
    const ScalarMatrix mine = ricci(alg, ScalarMatrix::identity(kDim));
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        CHECK(abs(ric[i][j] - to_real(mine(i, j))) < tol);
        CHECK(abs(ric[i][j] - Real(i == j ? -1 : 0)) < tol);
      }
    }
  }
}
