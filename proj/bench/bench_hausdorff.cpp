#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "texpic/hausdorff_kernels.hpp"

namespace {

std::vector<texpic::Point> cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> c(0.0, 300.0);
  std::vector<texpic::Point> out(n);
  for (auto& p : out) p = {c(rng), c(rng)};
  return out;
}

template <double (*Kernel)(std::span<const texpic::Point>, std::span<const texpic::Point>)>
void directed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 1);
  const auto b = cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK_TEMPLATE(directed, texpic::kernels::directed_hausdorff_serial)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK_TEMPLATE(directed, texpic::kernels::directed_hausdorff_parallel)->RangeMultiplier(4)->Range(256, 16384);

BENCHMARK_MAIN();
