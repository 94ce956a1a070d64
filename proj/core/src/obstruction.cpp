#include "su3/obstruction.hpp"

#include <random>
#include <sstream>

namespace su3 {

namespace {

bool rational_form(const Form& f) {
  for (const auto& [w, c] : f.terms()) {
    if (!c.is_rational()) return false;
  }
  return true;
}

KForm<Poly> lift(const Form& f) {
  KForm<Poly> out(f.degree());
  for (const auto& [w, c] : f.terms()) out.add(w, Poly(c.rational()));
  return out;
}

/// sum_k vars[offset + k] * basis[k]
KForm<Poly> generic(const std::vector<Form>& basis, int degree, const RingPtr& ring, std::size_t offset) {
  KForm<Poly> out(degree);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Poly v = Poly::variable(ring, offset + k);
    for (const auto& [w, c] : basis[k].terms()) out.add(w, v.scaled(c.rational()));
  }
  return out;
}

Form combination(const std::vector<Form>& basis, int degree, const std::vector<long>& coeffs) {
  Form out(degree);
  for (std::size_t k = 0; k < basis.size(); ++k) out = out + Scalar(coeffs[k]) * basis[k];
  return out;
}

}  // namespace

ObstructionReport obstruction_test(const LieAlgebra& algebra, const Form& alpha, std::uint64_t seed) {
  if (alpha.degree() != 1) throw DegreeOverflow("alpha must be a 1-form");
  if (alpha.is_zero()) throw ParamOutOfRange("alpha must be nonzero");
  if (!algebra.is_rational() || !rational_form(alpha)) {
    throw InexactScalars("the obstruction test needs rational structure constants; rationalize first");
  }

  ObstructionReport r;
  r.algebra = algebra.name();
  r.alpha = alpha;
  const std::vector<Form> closed3 = closed_forms(algebra, 3).basis;
  const std::vector<Form> closed4 = closed_forms(algebra, 4).basis;
  r.closed3_dim = closed3.size();
  r.closed4_dim = closed4.size();

  std::vector<std::string> names;
  for (std::size_t k = 1; k <= closed3.size(); ++k) names.push_back("r" + std::to_string(k));
  for (std::size_t k = 1; k <= closed4.size(); ++k) names.push_back("s" + std::to_string(k));
  const RingPtr ring = PolyRing::make(names);

  const KForm<Poly> a = lift(alpha);
  const KForm<Poly> rho = generic(closed3, 3, ring, 0);
  const KForm<Poly> sigma = generic(closed4, 4, ring, closed3.size());
  r.polynomial = top_coefficient(wedge(wedge(a, jtilde_pullback(rho, a)), sigma));
  r.obstructed = r.polynomial.is_zero();

  std::ostringstream detail;
  if (r.obstructed) {
    detail << "top(alpha ^ J~*alpha ^ sigma) vanishes identically over " << closed3.size()
           << " closed 3-forms and " << closed4.size() << " closed 4-forms";
    r.witness_detail = detail.str();
    return r;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<long> c3(closed3.size()), c4(closed4.size());
    for (auto& c : c3) c = static_cast<long>(rng() % 7) - 3;
    for (auto& c : c4) c = static_cast<long>(rng() % 7) - 3;
    Form rho_v = combination(closed3, 3, c3);
    Form sigma_v = combination(closed4, 4, c4);
    // Re-verify on the concrete forms rather than trusting the polynomial.
    Scalar value = top_coefficient(wedge(wedge(alpha, jtilde_pullback(rho_v, alpha)), sigma_v));
    if (is_zero(value)) continue;
    if (!algebra.d(rho_v).is_zero() || !algebra.d(sigma_v).is_zero()) {
      throw JacobiViolation("closed-form basis produced a non-closed form");
    }
    detail << "rho = " << to_string(rho_v) << "; sigma = " << to_string(sigma_v)
           << "; top(alpha ^ J~*alpha ^ sigma) = " << to_string(value);
    r.rho = std::move(rho_v);
    r.sigma = std::move(sigma_v);
    r.value = std::move(value);
    r.witness_detail = detail.str();
    return r;
  }
  throw Error("no counterexample found for a nonzero obstruction polynomial");
}

std::vector<Form> default_alpha_candidates() {
  std::vector<Form> out;
  for (int i = 1; i <= kDim; ++i) out.push_back(basis_form({i}));
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      out.push_back(basis_form({i}) + basis_form({j}));
      out.push_back(basis_form({i}) - basis_form({j}));
    }
  }
  return out;
}

std::optional<ObstructionReport> obstruction_scan(const LieAlgebra& algebra, const std::vector<Form>& candidates,
                                                  std::uint64_t seed) {
  for (const auto& alpha : candidates) {
    ObstructionReport r = obstruction_test(algebra, alpha, seed);
    if (r.obstructed) return r;
  }
  return std::nullopt;
}

std::string format_obstruction(const ObstructionReport& r) {
  std::ostringstream os;
  os << "su3-report v1\n";
  os << "algebra: " << r.algebra << "\n";
  os << "alpha: " << to_string(r.alpha) << "\n";
  os << "closed 3-forms: " << r.closed3_dim << "\n";
  os << "closed 4-forms: " << r.closed4_dim << "\n";
  os << "obstructed: " << (r.obstructed ? "true" : "false") << "\n";
  os << "polynomial: " << r.polynomial.to_string() << "\n";
  os << "witness: " << r.witness_detail << "\n";
  return os.str();
}

}  // namespace su3
