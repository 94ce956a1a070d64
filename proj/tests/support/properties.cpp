#include "properties.hpp"

#include <sstream>

#include "fixtures.hpp"
#include "su3/torsion.hpp"

namespace su3::test {

namespace {

int parity_sign(int k, int l) { return (k * l) % 2 == 0 ? 1 : -1; }

std::string describe(const std::string& what, int trial) { return what + " (trial " + std::to_string(trial) + ")"; }

std::vector<LieAlgebra> sample_algebras() {
  std::vector<LieAlgebra> out{catalog("su2su2"), catalog("a6_99"), catalog("abelian")};
  for (const char* spec : {"s6", "s12,s=1/3,t=1/2", "s13"}) out.push_back(rationalize(catalog_from_spec(spec))->algebra);
  return out;
}

Form volume_interior(const Vector6<Scalar>& v) {
  const Form vol = Form::basis(IndexWord::full());
  Form out(kDim - 1);
  for (int j = 1; j <= kDim; ++j) out = out + v[j - 1] * interior_basis(j, vol);
  return out;
}

}  // namespace

Failures check_anticommutativity(std::uint64_t seed, int trials) {
  Rng rng(seed);
  Failures f;
  for (int t = 0; t < trials; ++t) {
    const int k = static_cast<int>(rng.integer(0, 3));
    const int l = static_cast<int>(rng.integer(0, kDim - k));
    const Form a = random_form(rng, k), b = random_form(rng, l);
    if (!(wedge(a, b) == Scalar(parity_sign(k, l)) * wedge(b, a))) f.push_back(describe("a^b vs b^a", t));
  }
  return f;
}

Failures check_associativity(std::uint64_t seed, int trials) {
  Rng rng(seed + 1);
  Failures f;
  for (int t = 0; t < trials; ++t) {
    const int k = static_cast<int>(rng.integer(0, 2));
    const int l = static_cast<int>(rng.integer(0, 2));
    const int m = static_cast<int>(rng.integer(0, kDim - k - l));
    const Form a = random_form(rng, k), b = random_form(rng, l), c = random_form(rng, m);
    if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) f.push_back(describe("(a^b)^c vs a^(b^c)", t));
  }
  return f;
}

Failures check_antiderivation(std::uint64_t seed, int trials) {
  Rng rng(seed + 2);
  Failures f;
  const auto algebras = sample_algebras();
  for (int t = 0; t < trials; ++t) {
    const LieAlgebra& alg = algebras[static_cast<std::size_t>(t) % algebras.size()];
    const int k = static_cast<int>(rng.integer(1, 3));
    const int l = static_cast<int>(rng.integer(1, kDim - 1 - k));
    const Form a = random_form(rng, k), b = random_form(rng, l);
    const Form lhs = alg.d(wedge(a, b));
    const Form rhs = wedge(alg.d(a), b) + Scalar(k % 2 == 0 ? 1 : -1) * wedge(a, alg.d(b));
    if (!(lhs == rhs)) f.push_back(describe("Leibniz rule on " + alg.name(), t));
    if (!alg.d(alg.d(a)).is_zero()) f.push_back(describe("d^2 on " + alg.name(), t));
  }
  return f;
}

Failures check_five_form_roundtrip(std::uint64_t seed, int trials) {
  Rng rng(seed + 3);
  Failures f;
  for (int t = 0; t < trials; ++t) {
    Vector6<Scalar> v;
    for (auto& x : v) x = Scalar(rng.rational(4));
    if (!(five_form_iso(volume_interior(v)).vector == v)) f.push_back(describe("v -> i_v vol -> v", t));
    const Form gamma = random_form(rng, kDim - 1, 80);
    if (!(volume_interior(five_form_iso(gamma).vector) == gamma)) f.push_back(describe("gamma -> v -> gamma", t));
  }
  return f;
}

Failures check_lambda_scaling(std::uint64_t seed, int trials) {
  Rng rng(seed + 4);
  Failures f;
  for (int t = 0; t < trials; ++t) {
    const Form rho = random_form(rng, 3);
    Rational s = rng.rational(3);
    if (is_zero(s)) s = 2;
    const Scalar st(s);
    if (!(lambda(st * rho) == st * st * st * st * lambda(rho))) f.push_back(describe("lambda(t rho) = t^4 lambda", t));
  }
  return f;
}

Failures check_almost_complex(std::uint64_t seed, int trials) {
  Rng rng(seed + 5);
  Failures f;
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 50 * trials; ++attempt) {
    const Form rho = random_form(rng, 3, 50);
    const Scalar l = lambda(rho);
    if (is_zero(l) || sign(l) > 0) continue;
    ++done;
    const ScalarMatrix j = almost_complex(rho);
    if (!(j * j == Scalar(-1) * ScalarMatrix::identity(kDim))) f.push_back(describe("J^2 = -1", done));
    const Scalar s(Rational(rng.integer(1, 5), rng.integer(1, 3)));
    if (!(almost_complex(s * rho) == j)) f.push_back(describe("J(t rho) = J(rho)", done));
  }
  if (done < trials) f.push_back("too few stable 3-forms with lambda < 0");
  return f;
}

Failures check_metric_agreement(std::uint64_t seed, int trials) {
  Rng rng(seed + 6);
  Failures f;
  const Pair flat = flat_model();
  for (int t = 0; t < trials; ++t) {
    const ScalarMatrix a = random_unimodular(rng);
    const Form omega = pullback(a, flat.omega), psi = pullback(a, flat.psi);
    const SU3Structure s = validate(omega, psi);
    if (!s.valid()) {
      f.push_back(describe("transported flat model invalid", t));
      continue;
    }
    if (!(s.metric() == metric_wedge(omega, psi))) f.push_back(describe("metric vs metric_wedge", t));
    // The flat metric is the identity, so the transported one is A^T A.
    if (!(s.metric() == a.transpose() * a)) f.push_back(describe("metric vs A^T A", t));
  }
  return f;
}

Failures check_torsion_roundtrip(std::uint64_t seed, int trials) {
  Rng rng(seed + 7);
  Failures f;
  const LieAlgebra su = catalog("su2su2");
  auto check = [&](const LieAlgebra& alg, const Pair& p, const std::string& label) {
    const TorsionData td = torsion_forms(alg, p.omega, p.psi);
    const Form pm = psi_minus(p.psi);
    const Form omega2 = wedge(p.omega, p.omega);
    if (!negligible(alg.d(p.omega) - (Scalar(Rational(-3, 2)) * td.w1 * p.psi + td.w3))) {
      f.push_back(label + ": d omega");
    }
    if (!negligible(alg.d(pm) - (td.w1 * omega2 - wedge(td.w2, p.omega)))) f.push_back(label + ": d psi_minus");
    if (!negligible(wedge(td.w2, omega2))) f.push_back(label + ": w2 ^ omega^2");
    if (!negligible(wedge(td.w3, p.omega))) f.push_back(label + ": w3 ^ omega");
    if (!negligible(wedge(td.w3, p.psi)) || !negligible(wedge(td.w3, pm))) f.push_back(label + ": w3 ^ psi");
    return classify(alg, p.omega, p.psi);
  };
  for (const Pair& p : {example_double(), example_nearly_kahler(), example_half_flat(), example_coupled()}) {
    const TorsionData base = check(su, p, p.name);
    if (p.omega.terms().begin()->second.inexact()) continue;
    for (int t = 0; t < trials; ++t) {
      const ScalarMatrix a = random_unimodular(rng);
      const LieAlgebra alg = transport(su, a);
      const Pair q{p.name, pullback(a, p.omega), pullback(a, p.psi)};
      const TorsionData moved = check(alg, q, describe(p.name + " transported", t));
      if (moved.torsion_class != base.torsion_class || !(moved.w1 == base.w1)) {
        f.push_back(describe(p.name + " class or w1 changed under transport", t));
      }
    }
  }
  return f;
}

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites{
      {"anticommutativity", check_anticommutativity, 200},
      {"associativity", check_associativity, 200},
      {"anti-derivation", check_antiderivation, 120},
      {"five_form_iso round-trip", check_five_form_roundtrip, 100},
      {"lambda quartic scaling", check_lambda_scaling, 100},
      {"J scale invariance and J^2 = -1", check_almost_complex, 40},
      {"metric definitions agree", check_metric_agreement, 40},
      {"torsion round-trip and primitivity", check_torsion_roundtrip, 6},
  };
  return suites;
}

}  // namespace su3::test
