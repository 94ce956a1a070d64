#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "su3/groebner.hpp"
#include "su3/hitchin.hpp"
#include "su3/liealg.hpp"
#include "su3/obstruction.hpp"
#include "su3/systems.hpp"

namespace {

using namespace su3;

const Form kPsi = parse_form(
    "-1/54*sqrt(3)*e^{2,3,4} + 1/54*sqrt(3)*e^{1,5,6} + 1/54*sqrt(3)*e^{1,3,5} - 1/54*sqrt(3)*e^{2,4,6}"
    " - 1/54*sqrt(3)*e^{1,2,6} + 1/54*sqrt(3)*e^{3,4,5}");

void BM_Wedge33(benchmark::State& state) {
  const Form a = parse_form("e^{1,3,5} - e^{1,4,6} - e^{2,3,6} - e^{2,4,5}");
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, kPsi));
}
BENCHMARK(BM_Wedge33);

void BM_Lambda(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambda(kPsi));
}
BENCHMARK(BM_Lambda);

void BM_Differential(benchmark::State& state) {
  const LieAlgebra alg = catalog("a6_99");
  for (auto _ : state) benchmark::DoNotOptimize(alg.d(kPsi));
}
BENCHMARK(BM_Differential);

void BM_Cyclic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  const RingPtr ring = PolyRing::make(names);
  std::vector<Poly> gens;
  for (std::size_t k = 1; k <= n; ++k) {
    Poly sum;
    for (std::size_t s = 0; s < n; ++s) {
      Poly term(1);
      for (std::size_t j = 0; j < k; ++j) term = term * Poly::variable(ring, names[(s + j) % n]);
      sum = sum + term;
    }
    if (k == n) sum = sum - Poly(1);
    gens.push_back(sum);
  }
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_Cyclic)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_StandardAndJensen(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(thm32_pipeline());
}
BENCHMARK(BM_StandardAndJensen)->Unit(benchmark::kMillisecond);

void BM_ObstructionScan(benchmark::State& state) {
  const LieAlgebra alg = catalog_from_spec("s12,s=1/3,t=1/2");
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_test(alg, basis_form({6})));
}
BENCHMARK(BM_ObstructionScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
