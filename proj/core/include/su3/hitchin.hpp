#pragma once

// Hitchin's stable forms: the endomorphism K_rho, the quartic invariant
// lambda, the almost complex structure J, psi_minus and the induced metric.
// The volume form e^{123456} is fixed once and for all.

#include <memory>
#include <mutex>
#include <optional>

#include "su3/exterior.hpp"
#include "su3/matrix.hpp"

namespace su3 {

/// Column j holds the vector part of A((i_{e_j} rho) ^ rho).
template <class R>
Matrix<R> k_endo(const KForm<R>& rho) {
  if (rho.degree() != 3) throw DegreeOverflow("k_endo needs a 3-form");
  Matrix<R> k(kDim, kDim);
  for (int j = 1; j <= kDim; ++j) {
    auto v = five_form_iso(wedge(interior_basis(j, rho), rho)).vector;
    for (int i = 0; i < kDim; ++i) k(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = v[i];
  }
  return k;
}

/// (1/6) tr K^2.
template <class R>
R lambda(const KForm<R>& rho) {
  Matrix<R> k = k_endo(rho);
  return R(Rational(1, 6)) * (k * k).trace();
}

/// Omega(i, j) = omega(e_i, e_j).
template <class R>
Matrix<R> omega_matrix(const KForm<R>& omega) {
  if (omega.degree() != 2) throw DegreeOverflow("omega_matrix needs a 2-form");
  Matrix<R> m(kDim, kDim);
  for (const auto& [w, c] : omega.terms()) {
    auto idx = w.indices();
    std::size_t i = static_cast<std::size_t>(idx[0] - 1), j = static_cast<std::size_t>(idx[1] - 1);
    m(i, j) = c;
    m(j, i) = -c;
  }
  return m;
}

/// sqrt(-lambda) * h as a matrix: -Omega * K. Polynomial in the coefficients.
template <class R>
Matrix<R> scaled_metric(const KForm<R>& omega, const KForm<R>& rho) {
  return -(omega_matrix(omega) * k_endo(rho));
}

/// rho(X, Y, Z) for a 3-form.
Scalar evaluate3(const Form& rho, const ScalarVector& x, const ScalarVector& y, const ScalarVector& z);

/// J = -K / sqrt(|lambda|). Throws NotStable (lambda = 0), WrongOrientation (lambda > 0).
ScalarMatrix almost_complex(const Form& rho);
/// psi_minus(X, Y, Z) = rho(JX, JY, JZ).
Form psi_minus(const Form& rho);
/// H(i, j) = omega(e_i, J e_j). Throws NotStable, NotSymmetric.
ScalarMatrix metric(const Form& omega, const Form& psi_plus);
/// H(i, j) = -3 top((i_{e_i} omega) ^ (i_{e_j} psi) ^ psi) / top(omega^3). Throws Degenerate2Form.
ScalarMatrix metric_wedge(const Form& omega, const Form& psi_plus);

struct StructureFlags {
  bool stable2 = false;
  bool stable3 = false;
  bool lambda_negative = false;
  bool compatible = false;
  bool normalized = false;
  bool metric_positive = false;

  bool all() const {
    return stable2 && stable3 && lambda_negative && compatible && normalized && metric_positive;
  }
};

/// A pair (omega, psi_plus) with lazily computed derived data. Copies share
/// the cache.
class SU3Structure {
 public:
  SU3Structure(Form omega, Form psi_plus);

  const Form& omega() const { return omega_; }
  const Form& psi_plus() const { return psi_plus_; }

  const Scalar& lambda() const;
  /// Throws NotStable or WrongOrientation.
  const ScalarMatrix& j() const;
  const Form& psi_minus() const;
  /// Throws as metric().
  const ScalarMatrix& metric() const;
  const StructureFlags& flags() const;
  bool valid() const { return flags().all(); }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<Scalar> lambda;
    std::optional<ScalarMatrix> j;
    std::optional<Form> psi_minus;
    std::optional<ScalarMatrix> metric;
    std::optional<StructureFlags> flags;
  };
  Form omega_;
  Form psi_plus_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Never throws on invalid pairs; failures land in the flags.
SU3Structure validate(const Form& omega, const Form& psi_plus);

}  // namespace su3
