#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "toral/algebra.hpp"
#include "toral/cellbif.hpp"
#include "toral/cells.hpp"
#include "toral/leaf.hpp"
#include "toral/leafbif.hpp"
#include "toral/normalform.hpp"
#include "worked_systems.hpp"

using namespace toral;

namespace {

LeafVectorField reduced(int grade) {
  EulerianSystem sys = system_from_json(worked::kSystemB);
  LeafSpec leaf = LeafSpec::from_squares(
      KPermutation::from_selected(3, {1, 3}), {Rat(4, 5), Rat(1, 5)});
  Trunc tr;
  tr.rho_max = grade;
  tr.mu_max = 2;
  return leaf_reduce(sys, leaf, tr);
}

CellNFCoeffs mixed_three() {
  CellNFCoeffs cf;
  cf.n = 3;
  cf.k = 3;
  cf.sigma = KPermutation::from_selected(3, {1, 2, 3});
  cf.a_e = {1, -1, 1};
  cf.a_ee = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  return cf;
}

void BM_LeafReduce(benchmark::State& state) {
  EulerianSystem sys = system_from_json(worked::kSystemB);
  LeafSpec leaf = LeafSpec::from_squares(
      KPermutation::from_selected(3, {1, 3}), {Rat(4, 5), Rat(1, 5)});
  Trunc tr;
  tr.rho_max = static_cast<int>(state.range(0));
  tr.mu_max = 2;
  for (auto _ : state) benchmark::DoNotOptimize(leaf_reduce(sys, leaf, tr));
}
BENCHMARK(BM_LeafReduce)->Arg(5)->Arg(7);

void BM_FirstLevelNF(benchmark::State& state) {
  int grade = static_cast<int>(state.range(0));
  LeafVectorField lvf = reduced(grade);
  for (auto _ : state)
    benchmark::DoNotOptimize(first_level_nf(lvf, grade, 2));
}
BENCHMARK(BM_FirstLevelNF)->Arg(5)->Arg(7);

void BM_InfiniteLevelPNF(benchmark::State& state) {
  int grade = static_cast<int>(state.range(0));
  GradedLElement nf = first_level_nf(reduced(grade), grade, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(infinite_level_pnf(nf, grade, 2));
}
BENCHMARK(BM_InfiniteLevelPNF)->Arg(7);

void BM_PositiveRootCount(benchmark::State& state) {
  std::mt19937 rng(0);
  std::uniform_real_distribution<double> un(-2.0, 2.0);
  for (auto _ : state) {
    RootReport r = count_positive_roots_rh(un(rng), un(rng), un(rng), 1.0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PositiveRootCount);

void BM_ExactFlow(benchmark::State& state) {
  CellNFCoeffs cf = mixed_three();
  std::vector<double> r0 = {0.1, 0.2, 0.1};
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_flow(r0, 2.0, -0.5, cf));
}
BENCHMARK(BM_ExactFlow);

void BM_ClassifyCellGrid(benchmark::State& state) {
  CellNFCoeffs cf = mixed_three();
  int grid = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_cell_bifurcation(cf, 0.1, grid));
}
BENCHMARK(BM_ClassifyCellGrid)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
