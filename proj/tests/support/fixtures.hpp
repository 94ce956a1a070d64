#pragma once

// Shared test data: the worked examples on su(2) + su(2), the flat model,
// seeded random forms and basis changes that transport structures between
// isomorphic presentations.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "su3/hitchin.hpp"
#include "su3/liealg.hpp"

namespace su3::test {

constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seed from SU3_TEST_SEED when set, kDefaultSeed otherwise.
std::uint64_t test_seed();

struct Pair {
  std::string name;
  Form omega;
  Form psi;
};

/// omega = e^12 + e^34 + e^56, psi = Re (e^1 + i e^2)(e^3 + i e^4)(e^5 + i e^6).
Pair flat_model();
Pair example_double();        // standard metric, Double
Pair example_nearly_kahler();  // Jensen metric, NearlyKahler
Pair example_half_flat();      // Jensen metric, neither coupled nor double
Pair example_coupled();        // psi = 3^(1/4) d omega

/// 4th root of 3 and the coefficient cbrt(4) * 3^(1/6) / 2 at the current precision.
Scalar fourth_root_3();
Scalar jensen_example_coefficient();

/// sqrt(-lambda) * H on the restricted mixed ansatz of su(2) + su(2), in the
/// variables a14..a36 and c, keyed by (i, j) for the nonzero upper entries
/// with i <= 3.
const std::map<std::pair<int, int>, std::string>& h_tilde_reference();

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational(long bound);
  bool chance(unsigned percent) { return engine_() % 100 < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Sparse random form with small rational coefficients.
Form random_form(Rng& rng, int degree, unsigned density_percent = 60);
/// Integer matrix of determinant 1: a product of unipotent triangular factors.
ScalarMatrix random_unimodular(Rng& rng);

/// Pullback along e^i -> sum_j A(i, j) e^j.
Form pullback(const ScalarMatrix& a, const Form& f);
/// The algebra whose differential is A^* d (A^*)^{-1}; A^* then carries
/// forms on `algebra` to forms on the result, commuting with d.
LieAlgebra transport(const LieAlgebra& algebra, const ScalarMatrix& a);

}  // namespace su3::test
