#include <benchmark/benchmark.h>

#include "rghw/codes.hpp"
#include "rghw/oracle.hpp"
#include "rghw/polynomials.hpp"
#include "rghw/weights.hpp"

namespace {

// Single closed-form value on a box with 10^9 points.
void BM_RelativeWeightLargeBox(benchmark::State& state) {
  const rghw::BoxShape shape({1000, 1000, 1000});
  const rghw::DegreeBand band(500, 1500);
  const auto ell = rghw::band_size(shape, band);
  std::uint64_t r = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rghw::relative_weight({shape, band, r}));
    r = (r * 7919) % ell + 1;
  }
}
BENCHMARK(BM_RelativeWeightLargeBox);

void BM_NthBandElement(benchmark::State& state) {
  const rghw::BoxShape shape(std::vector<int>(static_cast<std::size_t>(state.range(0)), 8));
  const rghw::DegreeBand band(-1, shape.k() / 2);
  const auto ell = rghw::band_size(shape, band);
  for (auto _ : state) benchmark::DoNotOptimize(rghw::nth_band_element(shape, band, ell / 2 + 1));
}
BENCHMARK(BM_NthBandElement)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_FullHierarchy(benchmark::State& state) {
  const rghw::BoxShape shape({16, 16, 16});
  const rghw::DegreeBand band(-1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rghw::hierarchy(shape, band));
}
BENCHMARK(BM_FullHierarchy)->Arg(5)->Arg(15)->Arg(45);

void BM_Shadow(benchmark::State& state) {
  const rghw::BoxShape shape({8, 8, 8});
  const auto band = rghw::enumerate_band_codes(shape, rghw::DegreeBand(4, 10));
  const rghw::PointSet prefix(band.rbegin(), band.rbegin() + state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rghw::shadow(shape, prefix));
}
BENCHMARK(BM_Shadow)->Arg(4)->Arg(32)->Arg(128);

void BM_MaximalFamilyZeros(benchmark::State& state) {
  const rghw::Field field(7);
  const auto grid = rghw::build_grid(field, {7, 7, 7});
  const auto fam = rghw::maximal_family(grid, rghw::DegreeBand(2, 6), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rghw::common_zero_count(fam, grid));
}
BENCHMARK(BM_MaximalFamilyZeros)->Arg(1)->Arg(10)->Arg(40);

void BM_SupportOracle(benchmark::State& state) {
  const rghw::Field field(static_cast<std::uint32_t>(state.range(0)));
  const auto grid = rghw::build_grid(field, {2, 2, 2});
  const auto c1 = rghw::build_code(grid, 2), c2 = rghw::build_code(grid, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rghw::oracle_rghw_support(c1, c2, 3));
}
BENCHMARK(BM_SupportOracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WindowOracle(benchmark::State& state) {
  const rghw::Field field(3);
  const auto grid = rghw::build_grid(field, {3, 3});
  const auto c1 = rghw::build_code(grid, 3), c2 = rghw::build_code(grid, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rghw::oracle_rghw_window(c1, c2, 2));
}
BENCHMARK(BM_WindowOracle)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
