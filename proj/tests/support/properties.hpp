#pragma once

// Seeded property checks. Each returns the list of failed instances, empty
// on success, so both doctest and the acceptance runner can use them.

#include <cstdint>
#include <string>
#include <vector>

namespace su3::test {

using Failures = std::vector<std::string>;

Failures check_anticommutativity(std::uint64_t seed, int trials);
Failures check_associativity(std::uint64_t seed, int trials);
Failures check_antiderivation(std::uint64_t seed, int trials);
Failures check_five_form_roundtrip(std::uint64_t seed, int trials);
Failures check_lambda_scaling(std::uint64_t seed, int trials);
/// J(t rho) = J(rho) for t > 0 and J^2 = -1 on random stable 3-forms with lambda < 0.
Failures check_almost_complex(std::uint64_t seed, int trials);
/// metric() and metric_wedge() agree on normalized pairs obtained from the
/// flat model by random unimodular basis changes.
Failures check_metric_agreement(std::uint64_t seed, int trials);
/// Torsion forms rebuild d omega and d psi_minus, w2 and w3 are primitive,
/// and the class survives transport to isomorphic presentations.
Failures check_torsion_roundtrip(std::uint64_t seed, int trials);

struct PropertySuite {
  std::string name;
  Failures (*run)(std::uint64_t, int);
  int trials;
};

const std::vector<PropertySuite>& property_suites();

}  // namespace su3::test
