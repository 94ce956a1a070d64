#include "su3/hitchin.hpp"

namespace su3 {

namespace {

ScalarVector column(const ScalarMatrix& m, std::size_t j) {
  ScalarVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

Scalar det3(const ScalarVector& x, const ScalarVector& y, const ScalarVector& z, int p, int q, int r) {
  return x[p] * (y[q] * z[r] - y[r] * z[q]) - x[q] * (y[p] * z[r] - y[r] * z[p]) +
         x[r] * (y[p] * z[q] - y[q] * z[p]);
}

}  // namespace

Scalar evaluate3(const Form& rho, const ScalarVector& x, const ScalarVector& y, const ScalarVector& z) {
  if (rho.degree() != 3) throw DegreeOverflow("evaluate3 needs a 3-form");
  Scalar total;
  for (const auto& [w, c] : rho.terms()) {
    auto idx = w.indices();
    total += c * det3(x, y, z, idx[0] - 1, idx[1] - 1, idx[2] - 1);
  }
  return total;
}

ScalarMatrix almost_complex(const Form& rho) {
  const Scalar l = lambda(rho);
  if (is_zero(l)) throw NotStable("lambda(psi) = 0, the 3-form is not stable");
  if (sign(l) > 0) throw WrongOrientation("lambda(psi) > 0 gives a paracomplex structure");
  const Scalar root = sqrt(-l);
  const Scalar factor = scalar_div(Scalar(-1), root).value;
  return factor * k_endo(rho);
}

Form psi_minus(const Form& rho) {
  const ScalarMatrix j = almost_complex(rho);
  std::array<ScalarVector, kDim> images;
  for (std::size_t a = 0; a < kDim; ++a) images[a] = column(j, a);
  Form out(3);
  for (const auto& w : words_of_degree(3)) {
    auto idx = w.indices();
    out.add(w, evaluate3(rho, images[idx[0] - 1], images[idx[1] - 1], images[idx[2] - 1]));
  }
  return out;
}

ScalarMatrix metric(const Form& omega, const Form& psi_plus) {
  ScalarMatrix h = omega_matrix(omega) * almost_complex(psi_plus);
  if (!is_symmetric(h)) throw NotSymmetric("omega(., J.) is not symmetric");
  return h;
}

ScalarMatrix metric_wedge(const Form& omega, const Form& psi_plus) {
  if (omega.degree() != 2 || psi_plus.degree() != 3) throw DegreeOverflow("metric_wedge needs a 2-form and a 3-form");
  const Scalar vol = top_coefficient(wedge(wedge(omega, omega), omega));
  if (is_zero(vol)) throw Degenerate2Form("omega^3 = 0");
  std::array<Form, kDim> io, ip;
  for (int i = 1; i <= kDim; ++i) {
    io[i - 1] = interior_basis(i, omega);
    ip[i - 1] = wedge(interior_basis(i, psi_plus), psi_plus);
  }
  ScalarMatrix h(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      Scalar t = top_coefficient(wedge(io[i], ip[j]));
      h(i, j) = scalar_div(Scalar(-3) * t, vol).value;
    }
  }
  return h;
}

SU3Structure::SU3Structure(Form omega, Form psi_plus)
    : omega_(std::move(omega)), psi_plus_(std::move(psi_plus)) {
  if (omega_.is_zero() && omega_.degree() != 2) omega_ = Form(2);
  if (psi_plus_.is_zero() && psi_plus_.degree() != 3) psi_plus_ = Form(3);
  if (omega_.degree() != 2) throw DegreeOverflow("omega must be a 2-form");
  if (psi_plus_.degree() != 3) throw DegreeOverflow("psi_plus must be a 3-form");
}

const Scalar& SU3Structure::lambda() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->lambda) cache_->lambda = su3::lambda(psi_plus_);
  return *cache_->lambda;
}

const ScalarMatrix& SU3Structure::j() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->j) cache_->j = almost_complex(psi_plus_);
  return *cache_->j;
}

const Form& SU3Structure::psi_minus() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->psi_minus) cache_->psi_minus = su3::psi_minus(psi_plus_);
  return *cache_->psi_minus;
}

const ScalarMatrix& SU3Structure::metric() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->metric) cache_->metric = su3::metric(omega_, psi_plus_);
  return *cache_->metric;
}

const StructureFlags& SU3Structure::flags() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->flags) return *cache_->flags;
  }
  StructureFlags f;
  const Form omega3 = wedge(wedge(omega_, omega_), omega_);
  f.stable2 = !is_zero(top_coefficient(omega3));
  const Scalar& l = lambda();
  f.stable3 = !is_zero(l);
  f.lambda_negative = f.stable3 && sign(l) < 0;
  f.compatible = wedge(omega_, psi_plus_).is_zero();
  if (f.lambda_negative) {
    const Form& pm = psi_minus();
    f.compatible = f.compatible && wedge(omega_, pm).is_zero();
    f.normalized = wedge(psi_plus_, pm) == Scalar(Rational(2, 3)) * omega3;
    try {
      f.metric_positive = is_positive_definite(metric());
    } catch (const NotSymmetric&) {
      f.metric_positive = false;
    }
  }
  std::lock_guard lock(cache_->mutex);
  if (!cache_->flags) cache_->flags = f;
  return *cache_->flags;
}

SU3Structure validate(const Form& omega, const Form& psi_plus) {
  SU3Structure s(omega, psi_plus);
  s.flags();
  return s;
}

}  // namespace su3
