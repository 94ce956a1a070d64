#pragma once

// Symbolic SU(3)-structure ansaetze with polynomial coefficients, the
// polynomial systems they must satisfy, and the elimination pipelines built
// on them.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su3/groebner.hpp"
#include "su3/hitchin.hpp"
#include "su3/liealg.hpp"

namespace su3 {

using SymForm = KForm<Poly>;
using PolyMatrix = Matrix<Poly>;

enum class AnsatzMode {
  Full,            // omega = sum b_i, psi_plus = sum a_j
  Coupled,         // psi_plus = c d(omega)
  RestrictedMixed  // omega in su(2)* x su(2)*, psi_plus = c d(omega)
};

std::string to_string(AnsatzMode mode);
/// "full", "coupled" or "restricted_mixed".
AnsatzMode parse_ansatz_mode(std::string_view text);

struct Ansatz {
  RingPtr ring;
  AnsatzMode mode = AnsatzMode::Full;
  bool keep_c = false;
  /// Unknowns of the ansatz in ring order (b's, a's, then c when kept).
  std::vector<std::string> unknowns;
  SymForm omega = SymForm(2);
  SymForm psi_plus = SymForm(3);
  /// Structure constants lifted into the ring.
  std::array<SymForm, kDim> de;
  /// rho_d^2 - d for every radical replaced by a variable rho_d.
  std::vector<Poly> relations;

  SymForm d(const SymForm& a) const { return apply_differential(de, a); }
};

/// Generic forms on L. Surd structure constants become variables rho_d with
/// relations; floats are rejected (InexactScalars). RestrictedMixed requires
/// su(2) + su(2) (ModeUnsupported).
Ansatz generic_ansatz(const LieAlgebra& algebra, AnsatzMode mode, bool keep_c = false);

/// lambda(psi) as a polynomial.
Poly symbolic_lambda(const SymForm& psi_plus);
/// sqrt(-lambda) * H = -Omega * K, polynomial and symmetric.
PolyMatrix symbolic_h_tilde(const SymForm& omega, const SymForm& psi_plus);

struct MetricTarget {
  enum class Kind {
    None,
    Identity,              // H proportional to I
    ProportionalIdentity,  // same equations as Identity
    Jensen,                // H proportional to the Jensen matrix
    DiagEqual,             // off-diagonal zero, consecutive diagonal entries equal
    Diagonal,              // off-diagonal zero only
    DiagonalRatio          // off-diagonal zero, H_ii : H_jj = g_i : g_j
  };
  Kind kind = Kind::None;
  std::array<Rational, kDim> ratios{1, 1, 1, 1, 1, 1};

  static MetricTarget of(Kind kind) { return {kind, {1, 1, 1, 1, 1, 1}}; }
  /// "none", "identity", "proportional_identity", "jensen", "diag_equal", "diagonal".
  static MetricTarget parse(std::string_view text);
  std::string to_string() const;
};

struct NamedEquation {
  std::string name;
  Poly poly;
};

enum class VerdictKind { NotRun, EmptyVariety, SolutionFamily, Inconclusive };
std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::NotRun;
  std::string detail;
};

struct SystemReport {
  std::string title;
  RingPtr ring;
  std::size_t unknown_count = 0;
  std::vector<NamedEquation> equations;
  /// total degree -> number of equations
  std::map<unsigned, std::size_t> degree_histogram;
  /// Ordered "key: value" lines.
  std::vector<std::pair<std::string, std::string>> facts;
  /// Generators handed to the Groebner engine, if any.
  std::vector<Poly> ideal;
  Verdict verdict;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  /// Equations whose name starts with `prefix`.
  std::vector<Poly> family(std::string_view prefix) const;
};

/// beta_* (omega ^ psi = 0), dpsi_* (d psi = 0), gamma_* (d omega^2 = 0) and
/// H_* metric conditions on sqrt(-lambda) H. Identically zero equations are
/// dropped and counted in the facts.
SystemReport build_system(const Ansatz& ansatz, const MetricTarget& target);

/// True when the beta and gamma families agree up to nonzero rational factors.
bool beta_gamma_coincide(const SystemReport& report);

struct Thm32Result {
  SystemReport standard;  // H proportional to the identity
  SystemReport jensen;    // H proportional to the Jensen matrix
};

/// Coupled structures on su(2) + su(2) inducing the standard or the Jensen metric.
Thm32Result thm32_pipeline(const Budget& budget = {});

enum class PipelineMode { Coupled, HalfFlat };
std::string to_string(PipelineMode mode);
PipelineMode parse_pipeline_mode(std::string_view text);

/// Einstein target in the given presentation: the identity for the table
/// algebras, merely diagonal for a6_99.
MetricTarget default_einstein_target(const LieAlgebra& algebra);

/// Saturates the coupled or half-flat Einstein system by H_11, omega^3 and
/// lambda and tests for the unit ideal. Budget exhaustion becomes an
/// Inconclusive verdict. Without `target` the Einstein target is used; a
/// given target refers to the original basis.
SystemReport nonexistence_pipeline(const LieAlgebra& algebra, PipelineMode mode,
                                   const Budget& budget = {},
                                   std::optional<MetricTarget> target = std::nullopt);

/// Plain-text rendering: header, facts, equations, verdict.
std::string format_report(const SystemReport& report);

}  // namespace su3
