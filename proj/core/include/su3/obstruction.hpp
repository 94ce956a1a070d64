#pragma once

// Obstruction to half-flat structures: a covector alpha with
// alpha ^ J~*_rho alpha ^ sigma = 0 for all closed 3-forms rho and closed
// 4-forms sigma rules out half-flat SU(3)-structures on the Lie algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "su3/liealg.hpp"
#include "su3/poly.hpp"

namespace su3 {

/// (J~*_rho alpha)(e_X) = top(alpha ^ (i_{e_X} rho) ^ rho).
template <class R>
KForm<R> jtilde_pullback(const KForm<R>& rho, const KForm<R>& alpha) {
  if (rho.degree() != 3) throw DegreeOverflow("jtilde_pullback needs a 3-form");
  if (alpha.degree() != 1) throw DegreeOverflow("jtilde_pullback needs a 1-form");
  KForm<R> out(1);
  for (int x = 1; x <= kDim; ++x) {
    const KForm<R> inner = interior_basis(x, rho);
    out.add(IndexWord::of({x}), top_coefficient(wedge(wedge(alpha, inner), rho)));
  }
  return out;
}

struct ObstructionReport {
  std::string algebra;
  Form alpha = Form(1);
  bool obstructed = false;
  std::size_t closed3_dim = 0;
  std::size_t closed4_dim = 0;
  /// top(alpha ^ J~*_rho alpha ^ sigma) over the closed-form bases.
  Poly polynomial;
  /// Counterexample pair when not obstructed.
  std::optional<Form> rho;
  std::optional<Form> sigma;
  std::optional<Scalar> value;
  std::string witness_detail;
};

/// Exact test over generic closed forms. Throws InexactScalars unless the
/// algebra and alpha have rational coefficients, ParamOutOfRange when alpha = 0.
/// A non-obstructed verdict carries a re-verified counterexample found from `seed`.
ObstructionReport obstruction_test(const LieAlgebra& algebra, const Form& alpha, std::uint64_t seed = 1);

/// e^1..e^6, then e^i + e^j and e^i - e^j for i < j.
std::vector<Form> default_alpha_candidates();

/// First obstructing candidate, if any.
std::optional<ObstructionReport> obstruction_scan(const LieAlgebra& algebra,
                                                  const std::vector<Form>& candidates = default_alpha_candidates(),
                                                  std::uint64_t seed = 1);

std::string format_obstruction(const ObstructionReport& report);

}  // namespace su3
