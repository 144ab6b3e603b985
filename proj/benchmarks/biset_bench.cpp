#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "biset/blocks.hpp"
#include "biset/catalog.hpp"
#include "biset/center.hpp"
#include "biset/characters.hpp"
#include "biset/fusion.hpp"
#include "biset/group_context.hpp"

namespace biset {
namespace {

// Benchmarks take the group from a fixed list, indexed by the benchmark argument.
const std::vector<std::string> kGroups = {"S3", "C2xC2", "D8", "Q8", "A4", "C12", "S4"};

GroupPtr group_arg(const benchmark::State& state) {
  const std::string& name = kGroups[state.range(0)];
  return Catalog::builtin().build(name);
}

void label(benchmark::State& state) { state.SetLabel(kGroups[state.range(0)]); }

void BM_SubgroupLattice(benchmark::State& state) {
  GroupPtr g = group_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupLattice::build(g));
  label(state);
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 6);

void BM_CharacterTable(benchmark::State& state) {
  GroupPtr g = group_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(RationalCharacterTable(g));
  label(state);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 6);

void BM_LeftFreeStructureTensor(benchmark::State& state) {
  auto lat = SubgroupLattice::build(group_arg(state));
  for (auto _ : state) {
    auto alg = BisetAlgebra::build(lat, BisetTag::LeftFree);
    benchmark::DoNotOptimize(alg->structure().dimension());
  }
  label(state);
}
BENCHMARK(BM_LeftFreeStructureTensor)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_MultiplyStarVsBruteForce(benchmark::State& state) {
  auto alg = BisetAlgebra::build(SubgroupLattice::build(Catalog::builtin().build("D8")), BisetTag::LeftFree);
  const bool brute = state.range(0) == 1;
  const int d = alg->dimension();
  int i = 0;
  for (auto _ : state) {
    int a = i % d, b = (i / d) % d;
    benchmark::DoNotOptimize(brute ? alg->multiply_bruteforce(a, b) : alg->multiply_star(a, b));
    ++i;
  }
  state.SetLabel(brute ? "bruteforce" : "star");
}
BENCHMARK(BM_MultiplyStarVsBruteForce)->Arg(0)->Arg(1);

void BM_CenterOracleBifree(benchmark::State& state) {
  auto ctx = GroupContext::create(group_arg(state));
  const auto& s = ctx->algebra(BisetTag::Bifree)->structure();
  for (auto _ : state) benchmark::DoNotOptimize(center_oracle(s, 4000));
  label(state);
}
BENCHMARK(BM_CenterOracleBifree)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_DirectRelation(benchmark::State& state) {
  auto ctx = GroupContext::create(group_arg(state));
  auto pairs = compute_EG(*ctx);
  for (auto _ : state) benchmark::DoNotOptimize(DirectRelation(*ctx, pairs));
  label(state);
}
BENCHMARK(BM_DirectRelation)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_BifreeBlocksOverZ(benchmark::State& state) {
  auto ctx = GroupContext::create(group_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(bifree_blocks(*ctx, CoefficientRing::integers()));
  label(state);
}
BENCHMARK(BM_BifreeBlocksOverZ)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_FusionAlgebraS4(benchmark::State& state) {
  GroupPtr s4 = Catalog::builtin().build("S4");
  for (auto _ : state) {
    FusionSystem fs = FusionSystem::sylow(s4, 2);
    benchmark::DoNotOptimize(fusion_algebra(fs).dimension());
  }
}
BENCHMARK(BM_FusionAlgebraS4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace biset

BENCHMARK_MAIN();
