#include "su3/systems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "su3/torsion.hpp"

namespace su3 {

namespace {

std::string word_digits(IndexWord w) {
  std::string s;
  for (int i : w.indices()) s += static_cast<char>('0' + i);
  return s;
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "H_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

bool same_differential(const LieAlgebra& a, const LieAlgebra& b) {
  for (int i = 1; i <= kDim; ++i) {
    if (!(a.de(i) == b.de(i))) return false;
  }
  return true;
}

/// Radicands d > 1 occurring in the structure constants.
std::set<std::uint64_t> radicands(const LieAlgebra& algebra) {
  std::set<std::uint64_t> out;
  for (int i = 1; i <= kDim; ++i) {
    for (const auto& [w, c] : algebra.de(i).terms()) {
      if (c.inexact()) throw InexactScalars("symbolic systems need exact structure constants");
      for (const auto& [d, q] : c.surd()->terms()) {
        if (d != 1) out.insert(d);
      }
    }
  }
  return out;
}

std::string rho_name(std::uint64_t d) { return "rho" + std::to_string(d); }

Poly lift_scalar(const Scalar& c, const RingPtr& ring) {
  Poly p;
  for (const auto& [d, q] : c.surd()->terms()) {
    p += d == 1 ? Poly(q) : Poly::variable(ring, rho_name(d)).scaled(q);
  }
  return p;
}

/// Monic, sign-normalized copy for comparisons up to constant factors.
Poly normalized(const Poly& p) { return p.is_zero() ? p : p.monic(); }

std::string join(const std::vector<Poly>& ps) {
  std::string s = "<";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s + ">";
}

std::vector<Poly> variables_of(const RingPtr& ring, const std::vector<std::string>& names) {
  std::vector<Poly> out;
  for (const auto& n : names) out.push_back(Poly::variable(ring, n));
  return out;
}

/// Variables dividing f, and f with their powers removed.
std::pair<std::vector<std::size_t>, Poly> split_variable_factors(const Poly& f) {
  if (f.is_zero()) return {{}, f};
  std::map<std::uint32_t, std::uint32_t> common;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::map<std::uint32_t, std::uint32_t> here(m.entries().begin(), m.entries().end());
    if (first) {
      common = here;
      first = false;
      continue;
    }
    for (auto it = common.begin(); it != common.end();) {
      auto h = here.find(it->first);
      if (h == here.end()) {
        it = common.erase(it);
      } else {
        it->second = std::min(it->second, h->second);
        ++it;
      }
    }
  }
  Monomial g;
  std::vector<std::size_t> vars;
  for (const auto& [v, e] : common) {
    g = g * Monomial::variable(v, e);
    vars.push_back(v);
  }
  Poly cofactor;
  for (const auto& [m, c] : f.terms()) cofactor += Poly::monomial(f.ring(), g.quotient_of(m), c);
  return {vars, cofactor};
}

}  // namespace

std::string to_string(AnsatzMode mode) {
  switch (mode) {
    case AnsatzMode::Full: return "full";
    case AnsatzMode::Coupled: return "coupled";
    case AnsatzMode::RestrictedMixed: return "restricted_mixed";
  }
  return "?";
}

AnsatzMode parse_ansatz_mode(std::string_view text) {
  if (text == "full") return AnsatzMode::Full;
  if (text == "coupled") return AnsatzMode::Coupled;
  if (text == "restricted_mixed") return AnsatzMode::RestrictedMixed;
  throw ParseError("unknown ansatz mode '" + std::string(text) + "'");
}

Ansatz generic_ansatz(const LieAlgebra& algebra, AnsatzMode mode, bool keep_c) {
  if (mode == AnsatzMode::RestrictedMixed && !same_differential(algebra, catalog("su2su2"))) {
    throw ModeUnsupported("restricted_mixed is only defined on su(2) + su(2)");
  }
  const auto rads = radicands(algebra);

  Ansatz out;
  out.mode = mode;
  out.keep_c = keep_c && mode != AnsatzMode::Full;

  std::vector<IndexWord> omega_words;
  if (mode == AnsatzMode::RestrictedMixed) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 4; j <= 6; ++j) {
        omega_words.push_back(IndexWord::of({i, j}));
        out.unknowns.push_back("a" + std::to_string(i) + std::to_string(j));
      }
    }
  } else {
    omega_words = words_of_degree(2);
    for (std::size_t k = 1; k <= omega_words.size(); ++k) out.unknowns.push_back("b" + std::to_string(k));
  }
  if (mode == AnsatzMode::Full) {
    for (std::size_t k = 1; k <= words_of_degree(3).size(); ++k) out.unknowns.push_back("a" + std::to_string(k));
  }
  if (out.keep_c) out.unknowns.push_back("c");

  std::vector<std::string> names = out.unknowns;
  for (auto d : rads) names.push_back(rho_name(d));
  out.ring = PolyRing::make(names);

  for (int i = 1; i <= kDim; ++i) {
    SymForm f(2);
    for (const auto& [w, c] : algebra.de(i).terms()) f.add(w, lift_scalar(c, out.ring));
    out.de[static_cast<std::size_t>(i - 1)] = std::move(f);
  }
  for (auto d : rads) {
    Poly r = Poly::variable(out.ring, rho_name(d));
    out.relations.push_back(r * r - Poly(static_cast<long>(d)));
  }

  for (std::size_t k = 0; k < omega_words.size(); ++k) {
    out.omega.add(omega_words[k], Poly::variable(out.ring, k));
  }
  if (mode == AnsatzMode::Full) {
    const auto& words = words_of_degree(3);
    for (std::size_t k = 0; k < words.size(); ++k) {
      out.psi_plus.add(words[k], Poly::variable(out.ring, "a" + std::to_string(k + 1)));
    }
  } else {
    const Poly c = out.keep_c ? Poly::variable(out.ring, "c") : Poly(1);
    out.psi_plus = c * out.d(out.omega);
  }
  return out;
}

Poly symbolic_lambda(const SymForm& psi_plus) { return lambda(psi_plus); }

PolyMatrix symbolic_h_tilde(const SymForm& omega, const SymForm& psi_plus) {
  return scaled_metric(omega, psi_plus);
}

// ---------------------------------------------------------------- targets

MetricTarget MetricTarget::parse(std::string_view text) {
  if (text == "none") return of(Kind::None);
  if (text == "identity") return of(Kind::Identity);
  if (text == "proportional_identity") return of(Kind::ProportionalIdentity);
  if (text == "jensen") return of(Kind::Jensen);
  if (text == "diag_equal") return of(Kind::DiagEqual);
  if (text == "diagonal") return of(Kind::Diagonal);
  throw ParseError("unknown metric target '" + std::string(text) + "'");
}

std::string MetricTarget::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Identity: return "identity";
    case Kind::ProportionalIdentity: return "proportional_identity";
    case Kind::Jensen: return "jensen";
    case Kind::DiagEqual: return "diag_equal";
    case Kind::Diagonal: return "diagonal";
    case Kind::DiagonalRatio: {
      std::string s = "diag(";
      for (std::size_t i = 0; i < kDim; ++i) s += (i ? "," : "") + su3::to_string(ratios[i]);
      return s + ")";
    }
  }
  return "?";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NotRun: return "NotRun";
    case VerdictKind::EmptyVariety: return "EmptyVariety";
    case VerdictKind::SolutionFamily: return "SolutionFamily";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<Poly> SystemReport::family(std::string_view prefix) const {
  std::vector<Poly> out;
  for (const auto& e : equations) {
    if (std::string_view(e.name).substr(0, prefix.size()) == prefix) out.push_back(e.poly);
  }
  return out;
}

// ---------------------------------------------------------------- systems

SystemReport build_system(const Ansatz& ansatz, const MetricTarget& target) {
  SystemReport r;
  r.ring = ansatz.ring;
  r.unknown_count = ansatz.unknowns.size();
  r.fact("ansatz", to_string(ansatz.mode) + (ansatz.keep_c ? " (c kept)" : ""));
  r.fact("unknowns", std::to_string(r.unknown_count));
  r.fact("target", target.to_string());

  auto emit_family = [&](const std::string& prefix, const SymForm& form, int degree) {
    std::size_t zero = 0;
    for (const auto& w : words_of_degree(degree)) {
      Poly p = form.coefficient(w);
      if (p.is_zero()) {
        ++zero;
        continue;
      }
      r.equations.push_back({prefix + "_" + word_digits(w), p});
    }
    r.fact(prefix + " vanishing identically", std::to_string(zero) + " of " +
                                                   std::to_string(words_of_degree(degree).size()));
  };
  emit_family("beta", wedge(ansatz.omega, ansatz.psi_plus), 5);
  emit_family("dpsi", ansatz.d(ansatz.psi_plus), 4);
  emit_family("gamma", ansatz.d(wedge(ansatz.omega, ansatz.omega)), 5);

  using Kind = MetricTarget::Kind;
  if (target.kind != Kind::None) {
    const PolyMatrix h = symbolic_h_tilde(ansatz.omega, ansatz.psi_plus);
    auto push = [&](std::string name, Poly p) {
      if (!p.is_zero()) r.equations.push_back({std::move(name), std::move(p)});
    };
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = i + 1; j < kDim; ++j) {
        if (target.kind == Kind::Jensen && j == i + 3) continue;
        push(entry_name(i, j), h(i, j));
      }
    }
    if (target.kind == Kind::Jensen) {
      push("H_2_5-H_3_6", h(1, 4) - h(2, 5));
      push("H_3_6-H_1_4", h(2, 5) - h(0, 3));
      push("H_1_1+2H_1_4", h(0, 0) + Poly(2) * h(0, 3));
    }
    if (target.kind == Kind::DiagonalRatio) {
      for (std::size_t i = 0; i + 1 < kDim; ++i) {
        push(entry_name(i, i) + ":" + entry_name(i + 1, i + 1),
             h(i, i).scaled(target.ratios[i + 1]) - h(i + 1, i + 1).scaled(target.ratios[i]));
      }
    } else if (target.kind != Kind::Diagonal) {
      for (std::size_t i = 0; i + 1 < kDim; ++i) {
        push(entry_name(i, i) + "-" + entry_name(i + 1, i + 1), h(i, i) - h(i + 1, i + 1));
      }
    }
  }
  for (const auto& e : r.equations) ++r.degree_histogram[e.poly.total_degree()];
  return r;
}

bool beta_gamma_coincide(const SystemReport& report) {
  auto canon = [](std::vector<Poly> ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(normalized(p).to_string());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return canon(report.family("beta_")) == canon(report.family("gamma_"));
}

// ---------------------------------------------------------------- su(2)+su(2) quotients

namespace {

/// Single point of a linear ideal, as a vector over the ring variables.
std::optional<ScalarVector> linear_point(const std::vector<Poly>& gb, std::size_t nvars) {
  ScalarMatrix m(gb.size(), nvars);
  for (std::size_t r = 0; r < gb.size(); ++r) {
    if (gb[r].total_degree() != 1 || !is_zero(gb[r].constant_term())) return std::nullopt;
    for (const auto& [mono, c] : gb[r].terms()) m(r, mono.entries().front().first) = Scalar(c);
  }
  auto kernel = nullspace(m);
  if (kernel.size() != 1) return std::nullopt;
  return kernel.front();
}

void quotient_case(SystemReport& r, const Ansatz& ansatz, const Poly& p, const std::vector<Poly>& expected,
                   const std::string& label, const Budget& budget) {
  const std::vector<Poly> gens = r.family("H_");
  r.ideal = gens;
  r.fact("P", "<" + p.to_string() + ">");
  r.fact(label, std::to_string(gens.size()) + " generators");
  Ideal quotient = ideal_quotient_principal(Ideal(ansatz.ring, gens), p, budget);
  const auto& gb = quotient.groebner_basis(MonomialOrder::grevlex(), budget);
  r.fact(label + ":P", join(gb));
  const bool match = ideal_equal(quotient, Ideal(ansatz.ring, expected), MonomialOrder::grevlex(), budget);
  r.fact(label + ":P equals expected", match ? "yes" : "no");
}

}  // namespace

Thm32Result thm32_pipeline(const Budget& budget) {
  const LieAlgebra su = catalog("su2su2");
  const Ansatz ansatz = generic_ansatz(su, AnsatzMode::RestrictedMixed, false);
  const RingPtr& ring = ansatz.ring;
  const Poly p = symbolic_h_tilde(ansatz.omega, ansatz.psi_plus)(0, 0);
  auto v = [&](const char* n) { return Poly::variable(ring, n); };

  Thm32Result out;

  // Standard metric.
  out.standard = build_system(ansatz, MetricTarget::of(MetricTarget::Kind::Identity));
  out.standard.title = "coupled structures on su2su2 inducing the standard metric";
  quotient_case(out.standard, ansatz, p, variables_of(ring, ansatz.unknowns), "Q", budget);
  if (out.standard.facts.back().second == "yes") {
    out.standard.verdict = {VerdictKind::EmptyVariety,
                            "Q:P is the irrelevant ideal, so V(Q:P) is empty in CP^8"};
  } else {
    out.standard.verdict = {VerdictKind::SolutionFamily, "Q:P differs from the irrelevant ideal"};
  }

  // Jensen metric.
  SystemReport& r = out.jensen;
  r = build_system(ansatz, MetricTarget::of(MetricTarget::Kind::Jensen));
  r.title = "coupled structures on su2su2 inducing the Jensen metric";
  const std::vector<Poly> expected{v("a15"), v("a16"), v("a24"), v("a26"), v("a34"), v("a35"),
                                   v("a25") - v("a14"), v("a36") - v("a14")};
  quotient_case(r, ansatz, p, expected, "R", budget);

  Ideal quotient = ideal_quotient_principal(Ideal(ring, r.ideal), p, budget);
  auto point = linear_point(quotient.groebner_basis(MonomialOrder::grevlex(), budget), ring->size());
  if (!point) {
    r.verdict = {VerdictKind::SolutionFamily, "V(R:P) is not a single projective point"};
    return out;
  }
  // Scale so that the first nonzero coordinate is gamma.
  std::size_t lead = 0;
  while (is_zero((*point)[lead])) ++lead;
  const Scalar scale = (*point)[lead];
  std::string coords = "[";
  for (std::size_t k = 0; k < point->size(); ++k) {
    (*point)[k] = scalar_div((*point)[k], scale).value;
    Scalar x = (*point)[k];
    coords += (k ? ":" : "");
    coords += is_zero(x) ? "0" : (x == Scalar(1) ? "gamma" : to_string(x) + "*gamma");
  }
  coords += "]";
  r.fact("V(R:P)", coords);

  // Back-substitution with c and gamma symbolic.
  const RingPtr cg = PolyRing::make({"c", "gamma"});
  const Poly c = Poly::variable(cg, "c"), gamma = Poly::variable(cg, "gamma");
  SymForm omega(2);
  const auto& mixed_words = ansatz.omega.terms();
  std::size_t k = 0;
  for (const auto& [w, unused] : mixed_words) {
    (void)unused;
    const Rational q = (*point)[k++].rational();
    if (!is_zero(q)) omega.add(w, gamma.scaled(q));
  }
  const SymForm psi = c * apply_differential(ansatz.de, omega);
  const Poly lam = symbolic_lambda(psi);
  r.fact("lambda", lam.to_string());
  r.fact("lambda equals -3*c^4*gamma^4", lam == parse_poly("-3*c^4*gamma^4", cg) ? "yes" : "no");

  // Normalization: psi_plus ^ psi_minus scales as (c gamma)^2, omega^3 as gamma^3.
  auto concrete = [&](const Scalar& cv, const Scalar& gv) {
    Form o(2), s(3);
    std::vector<Scalar> values{cv, gv};
    for (const auto& [w, q] : omega.terms()) o.add(w, q.evaluate(values));
    for (const auto& [w, q] : psi.terms()) s.add(w, q.evaluate(values));
    return std::pair{o, s};
  };
  const auto [o1, s1] = concrete(Scalar(1), Scalar(1));
  const Scalar a = top_coefficient(wedge(s1, psi_minus(s1)));
  const Scalar b = top_coefficient(wedge(wedge(o1, o1), o1));
  const Scalar kappa = scalar_div(Scalar(Rational(2, 3)) * b, a).value;
  r.fact("normalization", "c^2 = " + to_string(kappa) + "*gamma");
  const Scalar expected_kappa = Scalar(Surd::term(Rational(-2, 3), 3));
  r.fact("normalization equals c^2 = -2*gamma/sqrt(3)", kappa == expected_kappa ? "yes" : "no");

  // Classify the gamma < 0 solutions for both signs of c.
  const Scalar g = Scalar(-1);
  const Scalar cpos = sqrt(kappa * g);
  bool all_nk = true;
  for (const Scalar& cv : {cpos, -cpos}) {
    auto [o, s] = concrete(cv, g);
    const bool valid = validate(o, s).valid();
    const TorsionData t = classify(su, o, s);
    all_nk = all_nk && valid && t.torsion_class == TorsionClass::NearlyKahler;
    r.fact(std::string("class at gamma=-1, c=") + (sign(cv) > 0 ? "+" : "-") + "sqrt(2/sqrt(3))",
           std::string(valid ? "valid " : "invalid ") + to_string(t.torsion_class));
  }
  r.verdict = {VerdictKind::SolutionFamily,
               coords + ", gamma < 0, c = +-sqrt(-2*gamma/sqrt(3)): " +
                   (all_nk ? std::string("NearlyKahler") : std::string("not nearly Kahler"))};
  return out;
}

// ---------------------------------------------------------------- nonexistence

std::string to_string(PipelineMode mode) { return mode == PipelineMode::Coupled ? "coupled" : "halfflat"; }

PipelineMode parse_pipeline_mode(std::string_view text) {
  if (text == "coupled") return PipelineMode::Coupled;
  if (text == "halfflat" || text == "half-flat" || text == "full") return PipelineMode::HalfFlat;
  throw ParseError("unknown pipeline mode '" + std::string(text) + "'");
}

MetricTarget default_einstein_target(const LieAlgebra& algebra) {
  if (algebra.name() == "a6_99") return MetricTarget::of(MetricTarget::Kind::Diagonal);
  return MetricTarget::of(MetricTarget::Kind::DiagEqual);
}

SystemReport nonexistence_pipeline(const LieAlgebra& algebra, PipelineMode mode, const Budget& budget,
                                   std::optional<MetricTarget> requested) {
  MetricTarget target = requested.value_or(default_einstein_target(algebra));
  std::optional<LieAlgebra> working;
  std::string presentation = "original basis";
  using Kind = MetricTarget::Kind;
  // Rescaling keeps diagonal targets diagonal; other targets keep the radicals.
  const bool diagonal_target = target.kind == Kind::None || target.kind == Kind::Identity ||
                               target.kind == Kind::ProportionalIdentity || target.kind == Kind::DiagEqual ||
                               target.kind == Kind::Diagonal;
  std::optional<Rationalization> rat;
  if (!algebra.is_rational() && diagonal_target) rat = rationalize(algebra);
  if (rat) {
    std::string scales;
    for (std::size_t i = 0; i < kDim; ++i) {
      scales += (i ? ", " : "") + std::string("f") + std::to_string(i + 1) + " = " + to_string(rat->scale[i]) +
                "*e" + std::to_string(i + 1);
    }
    presentation = "rescaled: " + scales;
    if (target.kind != Kind::None && target.kind != Kind::Diagonal) {
      target.kind = Kind::DiagonalRatio;
      target.ratios = rat->metric_diagonal;
    }
    working = std::move(rat->algebra);
  } else if (!algebra.is_rational()) {
    presentation = "radicals as variables";
  }
  const LieAlgebra& alg = working ? *working : algebra;

  const Ansatz ansatz =
      generic_ansatz(alg, mode == PipelineMode::Coupled ? AnsatzMode::Coupled : AnsatzMode::Full, false);
  SystemReport r = build_system(ansatz, target);
  r.title = to_string(mode) + " Einstein structures on " + algebra.name();
  r.facts.insert(r.facts.begin(), {"presentation", presentation});
  if (mode == PipelineMode::Coupled) r.fact("beta and gamma coincide", beta_gamma_coincide(r) ? "yes" : "no");

  if (ansatz.psi_plus.is_zero()) {
    r.verdict = {VerdictKind::Inconclusive, "degenerate ansatz: psi_plus vanishes identically"};
    return r;
  }

  // Rabinowitsch variables for H_11 (or every H_ii), omega^3 and lambda.
  // Variables dividing one of these are nonzero as well and get their own.
  const PolyMatrix h = symbolic_h_tilde(ansatz.omega, ansatz.psi_plus);
  std::vector<std::pair<std::string, Poly>> required;
  const bool linked = target.kind != MetricTarget::Kind::Diagonal;
  for (std::size_t i = 0; i < (linked ? 1u : std::size_t{kDim}); ++i) {
    required.emplace_back("y_h" + std::to_string(i + 1), h(i, i));
  }
  required.emplace_back("y_vol", top_coefficient(wedge(wedge(ansatz.omega, ansatz.omega), ansatz.omega)));
  required.emplace_back("y_lambda", symbolic_lambda(ansatz.psi_plus));

  std::vector<std::pair<std::string, Poly>> nonzero;
  std::set<std::size_t> factor_vars;
  for (auto& [n, f] : required) {
    auto [vars, cofactor] = split_variable_factors(f);
    factor_vars.insert(vars.begin(), vars.end());
    if (!cofactor.is_constant()) nonzero.emplace_back(n, std::move(cofactor));
  }
  // A positive definite metric has nonzero diagonal entries.
  for (std::size_t i = 0; i < kDim; ++i) {
    auto vars = split_variable_factors(h(i, i)).first;
    factor_vars.insert(vars.begin(), vars.end());
  }
  std::vector<std::pair<std::string, Poly>> factors;
  for (std::size_t v : factor_vars) factors.emplace_back("y_" + ansatz.ring->name(v), Poly::variable(ansatz.ring, v));
  nonzero.insert(nonzero.begin(), factors.begin(), factors.end());

  std::vector<std::string> names = ansatz.ring->names();
  for (const auto& [n, f] : nonzero) names.push_back(n);
  const RingPtr ring = PolyRing::make(names);
  std::vector<Poly> gens;
  for (const auto& e : r.equations) gens.push_back(e.poly.rebase(ring));
  for (const auto& rel : ansatz.relations) gens.push_back(rel.rebase(ring));
  std::string saturated;
  for (const auto& [n, f] : nonzero) {
    gens.push_back(Poly(1) - Poly::variable(ring, n) * f.rebase(ring));
    saturated += (saturated.empty() ? "" : ", ") + n.substr(2);
  }
  r.fact("saturated by", saturated);
  r.ideal = gens;

  try {
    GroebnerStats stats;
    const auto gb = buchberger(gens, MonomialOrder::grevlex(), budget, &stats);
    r.fact("groebner pairs", std::to_string(stats.pairs_processed));
    const bool unit = gb.size() == 1 && gb.front().is_constant();
    if (unit) {
      r.verdict = {VerdictKind::EmptyVariety, "1 lies in the saturated ideal"};
    } else {
      r.verdict = {VerdictKind::SolutionFamily,
                   "saturated ideal is proper, reduced basis of " + std::to_string(gb.size()) + " elements"};
    }
  } catch (const ResourceBudgetExceeded& e) {
    r.verdict = {VerdictKind::Inconclusive,
                 std::string("budget exhausted (") +
                     (e.resource() == ResourceBudgetExceeded::Resource::Time ? "time" : "memory") + ")"};
  }
  return r;
}

std::string format_report(const SystemReport& r) {
  std::ostringstream os;
  os << "su3-report v1\n";
  if (!r.title.empty()) os << "title: " << r.title << "\n";
  if (r.ring) {
    os << "variables:";
    for (const auto& n : r.ring->names()) os << " " << n;
    os << "\n";
  }
  for (const auto& [k, v] : r.facts) os << k << ": " << v << "\n";
  os << "equations: " << r.equations.size() << "\n";
  for (const auto& e : r.equations) os << "  " << e.name << " = " << e.poly.to_string() << "\n";
  os << "degrees:";
  for (const auto& [d, n] : r.degree_histogram) os << " " << d << ":" << n;
  os << "\n";
  os << "verdict: " << to_string(r.verdict.kind) << "\n";
  if (!r.verdict.detail.empty()) os << "detail: " << r.verdict.detail << "\n";
  return os.str();
}

}  // namespace su3
