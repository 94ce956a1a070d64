#pragma once

// Intrinsic torsion of half-flat SU(3)-structures on a Lie algebra:
//   d omega = -(3/2) w1 psi_plus + w3,  d psi_minus = w1 omega^2 - w2 ^ omega.

#include <optional>
#include <string>

#include "su3/hitchin.hpp"
#include "su3/liealg.hpp"

namespace su3 {

enum class TorsionClass { TorsionFree, NearlyKahler, Coupled, Double, HalfFlatGeneric, NotHalfFlat };

std::string to_string(TorsionClass c);

struct TorsionData {
  Scalar w1;
  Form w2 = Form(2);
  Form w3 = Form(3);
  TorsionClass torsion_class = TorsionClass::NotHalfFlat;
  /// c with d omega = c psi_plus.
  std::optional<Scalar> coupled_constant;
  /// k with d psi_minus = k omega^2.
  std::optional<Scalar> double_constant;
  bool quasi_kahler = false;
};

/// Nonzero test used by the classifier: exact for surds, 1e-30 for floats.
bool negligible(const Scalar& s);
bool negligible(const Form& f);

/// d psi_plus = 0 and d(omega^2) = 0.
bool is_half_flat(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus);

/// Extracts w1, w2, w3 of a half-flat structure. Throws InconsistentTorsion
/// when the two w1 extractions disagree or w2 has no solution.
TorsionData torsion_forms(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus);

/// torsion_forms plus the class label; NotHalfFlat leaves the forms empty.
TorsionData classify(const LieAlgebra& algebra, const Form& omega, const Form& psi_plus);

}  // namespace su3
