#include <benchmark/benchmark.h>

#include <vector>

#include "screwalg/classical_oracle.hpp"
#include "screwalg/theorems.hpp"
#include "support/generators.hpp"

using namespace screwalg;
using screwalg::testing::Gen;

namespace {

constexpr int kPool = 256;

std::vector<DualVec3> screws(std::uint64_t seed) {
  Gen g(seed);
  std::vector<DualVec3> v;
  for (int i = 0; i < kPool; ++i) v.push_back(g.proper_screw());
  return v;
}

void BM_DualMul(benchmark::State& state) {
  Gen g(1);
  std::vector<Dual> xs;
  for (int i = 0; i < kPool; ++i) xs.push_back(g.dual());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % kPool] * xs[(i + 1) % kPool]);
    ++i;
  }
}
BENCHMARK(BM_DualMul);

void BM_DualSqrt(benchmark::State& state) {
  Gen g(2);
  std::vector<Dual> xs;
  for (int i = 0; i < kPool; ++i) xs.push_back({g.uniform(0.1, 5.0), g.uniform(-5.0, 5.0)});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(xs[i++ % kPool]));
}
BENCHMARK(BM_DualSqrt);

void BM_Dot(benchmark::State& state) {
  const auto v = screws(3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dot(v[i % kPool], v[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_Dot);

void BM_Cross(benchmark::State& state) {
  const auto v = screws(4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross(v[i % kPool], v[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_Cross);

void BM_DualAngle(benchmark::State& state) {
  Gen g(5);
  std::vector<std::pair<Line, Line>> pairs;
  for (int i = 0; i < kPool; ++i) pairs.push_back(g.skew_pair());
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % kPool];
    benchmark::DoNotOptimize(dual_angle(a.screw(), b.screw()));
  }
}
BENCHMARK(BM_DualAngle);

void BM_OracleDistance(benchmark::State& state) {
  Gen g(5);
  std::vector<std::pair<oracle::PointDirectionLine, oracle::PointDirectionLine>> pairs;
  for (int i = 0; i < kPool; ++i) {
    const auto [a, b] = g.skew_pair();
    pairs.push_back({{a.closest_point().coords, a.direction()}, {b.closest_point().coords, b.direction()}});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % kPool];
    benchmark::DoNotOptimize(oracle::line_distance_angle(a, b));
  }
}
BENCHMARK(BM_OracleDistance);

void BM_AxisDecompose(benchmark::State& state) {
  const auto v = screws(6);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(axis_decompose(v[i++ % kPool]));
}
BENCHMARK(BM_AxisDecompose);

void BM_ExpSo3d(benchmark::State& state) {
  const auto v = screws(7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exp_so3d(v[i++ % kPool]));
}
BENCHMARK(BM_ExpSo3d);

void BM_ChainCompose(benchmark::State& state) {
  Gen g(8);
  std::vector<DualMat3> joints;
  for (int i = 0; i < state.range(0); ++i) joints.push_back(exp_so3d(g.dualvec(1.0)));
  for (auto _ : state) {
    DualMat3 product = DualMat3::identity();
    for (const auto& j : joints) product = product * j;
    benchmark::DoNotOptimize(frame_translation(product.transpose()));
  }
}
BENCHMARK(BM_ChainCompose)->Arg(6)->Arg(32);

void BM_GramSchmidt(benchmark::State& state) {
  Gen g(9);
  std::vector<std::array<DualVec3, 3>> bases;
  while (bases.size() < kPool) {
    const DualVec3 a = g.dualvec(), b = g.dualvec(), c = g.dualvec();
    if (std::abs(mixed(a, b, c).re()) > 0.5) bases.push_back({a, b, c});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& b = bases[i++ % kPool];
    benchmark::DoNotOptimize(gram_schmidt(b[0], b[1], b[2]));
  }
}
BENCHMARK(BM_GramSchmidt);

void BM_EquilibriumLaws(benchmark::State& state) {
  const auto v = screws(10);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(equilibrium_laws(v[i % kPool], v[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_EquilibriumLaws);

}  // namespace
BENCHMARK_MAIN();
