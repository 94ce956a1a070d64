#include "su3/torsion.hpp"

namespace su3 {

namespace {

const BigFloat& classify_tolerance() {
  static thread_local BigFloat tol = BigFloat::pow10(-30, kDefaultDigits);
  return tol;
}

/// Matrix of a -> a ^ omega from 2-forms to 4-forms.
ScalarMatrix wedge_omega_matrix(const Form& omega) {
  const auto& src = words_of_degree(2);
  const auto& dst = words_of_degree(4);
  std::map<IndexWord, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  ScalarMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Form image = wedge(Form::basis(src[c]), omega);
    for (const auto& [w, v] : image.terms()) m(row_of.at(w), c) = v;
  }
  return m;
}

}  // namespace

std::string to_string(TorsionClass c) {
  switch (c) {
    case TorsionClass::TorsionFree: return "TorsionFree";
    case TorsionClass::NearlyKahler: return "NearlyKahler";
    case TorsionClass::Coupled: return "Coupled";
    case TorsionClass::Double: return "Double";
    case TorsionClass::HalfFlatGeneric: return "HalfFlatGeneric";
    case TorsionClass::NotHalfFlat: return "NotHalfFlat";
  }
  return "?";
}

bool negligible(const Scalar& s) {
  return s.inexact() ? is_zero(s, classify_tolerance()) : is_zero(s);
}

bool negligible(const Form& f) {
  for (const auto& [w, c] : f.terms()) {
    if (!negligible(c)) return false;
  }
  return true;
}

bool is_half_flat(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus) {
  return negligible(algebra.d(psi_plus)) && negligible(algebra.d(wedge(omega, omega)));
}

TorsionData torsion_forms(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus) {
  const Form pm = psi_minus(psi_plus);
  const Form domega = algebra.d(omega);
  const Form dpm = algebra.d(pm);
  const Form omega2 = wedge(omega, omega);
  const Scalar vol = top_coefficient(wedge(omega2, omega));
  if (is_zero(vol)) throw Degenerate2Form("omega^3 = 0");

  TorsionData t;
  t.w1 = scalar_div(top_coefficient(wedge(dpm, omega)), vol).value;
  const Scalar check = scalar_div(-top_coefficient(wedge(domega, pm)), vol).value;
  if (!negligible(t.w1 - check)) {
    throw InconsistentTorsion("w1 from d(psi_minus) and from d(omega) disagree: " + to_string(t.w1) +
                              " vs " + to_string(check));
  }
  t.w3 = domega + Scalar(Rational(3, 2)) * t.w1 * psi_plus;

  // w2 ^ omega = w1 omega^2 - d psi_minus
  const Form rhs = t.w1 * omega2 - dpm;
  const auto& dst = words_of_degree(4);
  ScalarVector b(dst.size());
  for (std::size_t r = 0; r < dst.size(); ++r) b[r] = rhs.coefficient(dst[r]);
  auto x = solve(wedge_omega_matrix(omega), b);
  if (!x) throw InconsistentTorsion("w1 omega^2 - d psi_minus is not divisible by omega");
  const auto& src = words_of_degree(2);
  for (std::size_t c = 0; c < src.size(); ++c) t.w2.add(src[c], (*x)[c]);
  return t;
}

TorsionData classify(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus) {
  if (!is_half_flat(algebra, omega, psi_plus)) return {};
  TorsionData t = torsion_forms(algebra, omega, psi_plus);
  const bool w1 = !negligible(t.w1), w2 = !negligible(t.w2), w3 = !negligible(t.w3);
  if (!w1 && !w2 && !w3) {
    t.torsion_class = TorsionClass::TorsionFree;
  } else if (w1 && !w2 && !w3) {
    t.torsion_class = TorsionClass::NearlyKahler;
  } else if (w1 && w2 && !w3) {
    t.torsion_class = TorsionClass::Coupled;
  } else if (w1 && !w2 && w3) {
    t.torsion_class = TorsionClass::Double;
  } else {
    t.torsion_class = TorsionClass::HalfFlatGeneric;
  }
  const auto cls = t.torsion_class;
  if (cls == TorsionClass::NearlyKahler || cls == TorsionClass::Coupled) {
    t.coupled_constant = Scalar(Rational(-3, 2)) * t.w1;
  }
  if (cls == TorsionClass::NearlyKahler || cls == TorsionClass::Double) t.double_constant = t.w1;
  t.quasi_kahler = cls == TorsionClass::TorsionFree || cls == TorsionClass::NearlyKahler ||
                   cls == TorsionClass::Coupled;
  return t;
}

}  // namespace su3
