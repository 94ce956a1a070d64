#pragma once

// Six-dimensional Lie algebras given by their Chevalley-Eilenberg
// differentials de^1..de^6, the built-in catalog, and left-invariant
// curvature.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su3/exterior.hpp"
#include "su3/matrix.hpp"
#include "su3/poly.hpp"

namespace su3 {

using ParamMap = std::map<std::string, Scalar>;

/// Embeds scalar structure constants into a coefficient ring.
template <class R>
struct CoefficientLift;

template <>
struct CoefficientLift<Scalar> {
  static const Scalar& lift(const Scalar& s) { return s; }
};

template <>
struct CoefficientLift<Poly> {
  /// Throws InexactScalars unless the constant is rational.
  static Poly lift(const Scalar& s) { return Poly(s.rational()); }
  static const Poly& lift(const Poly& p) { return p; }
};

/// Extends the 1-form differentials `de` to `a` as an anti-derivation.
template <class R, class S>
KForm<R> apply_differential(const std::array<KForm<S>, kDim>& de, const KForm<R>& a) {
  if (a.degree() >= kDim) throw DegreeOverflow("d of a top-degree form");
  KForm<R> out(a.degree() + 1);
  for (const auto& [w, c] : a.terms()) {
    std::vector<int> idx = w.indices();
    for (std::size_t p = 0; p < idx.size(); ++p) {
      std::uint8_t pre = 0, post = 0;
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q < p) pre |= static_cast<std::uint8_t>(1u << (idx[q] - 1));
        if (q > p) post |= static_cast<std::uint8_t>(1u << (idx[q] - 1));
      }
      const IndexWord wpre = IndexWord::from_mask(pre);
      const IndexWord wpost = IndexWord::from_mask(post);
      for (const auto& [u, k] : de[static_cast<std::size_t>(idx[p] - 1)].terms()) {
        int s1 = merge_sign(wpre, u);
        if (s1 == 0) continue;
        IndexWord mid = IndexWord::from_mask(pre | u.mask());
        int s2 = merge_sign(mid, wpost);
        if (s2 == 0) continue;
        int sign = s1 * s2 * (p % 2 == 0 ? 1 : -1);
        R term = CoefficientLift<R>::lift(k) * c;
        out.add(IndexWord::from_mask(mid.mask() | post), sign > 0 ? term : -term);
      }
    }
  }
  return out;
}

class LieAlgebra {
 public:
  /// Throws JacobiViolation when d^2 != 0 and `check` is set.
  LieAlgebra(std::string name, std::array<Form, kDim> differential, ParamMap params = {},
             bool check = true);

  const std::string& name() const { return name_; }
  /// de^i for i in 1..6.
  const Form& de(int i) const { return differential_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<Form, kDim>& differential() const { return differential_; }
  const ParamMap& params() const { return params_; }
  /// All structure constants are rational.
  bool is_rational() const;
  /// Some structure constant is a float.
  bool is_inexact() const;

  template <class R>
  KForm<R> d(const KForm<R>& a) const;

 private:
  std::string name_;
  std::array<Form, kDim> differential_;
  ParamMap params_;
};

/// Chevalley-Eilenberg differential, extended as an anti-derivation.
template <class R>
KForm<R> LieAlgebra::d(const KForm<R>& a) const {
  return apply_differential(differential_, a);
}

template <class R>
KForm<R> ce_differential(const LieAlgebra& algebra, const KForm<R>& a) {
  return algebra.d(a);
}

/// d(de^i) = 0 for every i (floats compared against the zero tolerance).
bool check_jacobi(const LieAlgebra& algebra);

struct ClosedFormBasis {
  int degree = 0;
  std::vector<Form> basis;
};

/// Basis of ker(d) on k-forms; InexactScalars when float rank is ambiguous.
ClosedFormBasis closed_forms(const LieAlgebra& algebra, int k);

/// Matrix of d: Lambda^k -> Lambda^{k+1} in lexicographic word bases.
ScalarMatrix differential_matrix(const LieAlgebra& algebra, int k);

/// Ricci tensor of the left-invariant metric with Gram matrix H.
/// Throws SingularMetric.
ScalarMatrix ricci(const LieAlgebra& algebra, const ScalarMatrix& metric);

/// mu with Ric = mu * H, if any (floats within 1e-30).
std::optional<Scalar> einstein_check(const LieAlgebra& algebra, const ScalarMatrix& metric);

/// The Jensen matrix: 2 on the diagonal, -1 at (i, i+3) and (i+3, i).
ScalarMatrix jensen_metric();

// ---------------------------------------------------------------- catalog

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<std::string> parameters;  // in order, e.g. {"r", "t"}
  std::string range;                    // human readable constraint
  std::map<std::string, std::map<std::string, Scalar>> presets;  // param -> label -> value
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog algebra; missing parameters take defaults (r = 1,
/// s = t = 0). Throws UnknownName, ParamOutOfRange.
LieAlgebra catalog(std::string_view name, const ParamMap& params = {});

/// Parses "name[,param=value...]" where value is a scalar or a preset label.
LieAlgebra catalog_from_spec(std::string_view spec);

/// Algebra text format: "algebra <name>", "dim 6", then "de<i> = <form>" lines.
LieAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const LieAlgebra& algebra);

// ---------------------------------------------------------------- rationalization

/// A rational presentation f^i = scale_i * e^i of an algebra with surd
/// structure constants. The original orthonormal metric becomes
/// diag(metric_diagonal) in the new basis.
struct Rationalization {
  LieAlgebra algebra;
  std::array<Scalar, kDim> scale;
  std::array<Rational, kDim> metric_diagonal;
};

/// Chooses scale_i = sqrt(m_0 m_i) with square-free m's so that every
/// coefficient becomes rational; absent when no such choice exists.
std::optional<Rationalization> rationalize(const LieAlgebra& algebra);

}  // namespace su3
