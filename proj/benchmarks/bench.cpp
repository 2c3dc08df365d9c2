#include <benchmark/benchmark.h>

#include <random>

#include "plength/coset_table.hpp"
#include "plength/estimate.hpp"
#include "plength/families.hpp"
#include "plength/lattice.hpp"
#include "plength/parse.hpp"
#include "plength/simplify.hpp"
#include "plength/smith.hpp"

using namespace plength;

namespace {

void BM_ToddCoxeter(benchmark::State& state) {
  Presentation p = parse_presentation("< a, b | a^2, b^3, (a b)^7, (a b a b^-1)^4 >");
  SubgroupSpec trivial;
  for (auto _ : state) {
    CosetTable t = todd_coxeter(p, trivial, 100000);
    benchmark::DoNotOptimize(t.index());
  }
}
BENCHMARK(BM_ToddCoxeter);

void BM_LowIndex(benchmark::State& state) {
  Presentation p = surface(2).presentation;
  int max_index = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto tables = low_index_subgroups(p, max_index);
    benchmark::DoNotOptimize(tables.size());
  }
}
BENCHMARK(BM_LowIndex)->Arg(2)->Arg(3)->Arg(4);

void BM_Simplify(benchmark::State& state) {
  Presentation p = triangulate_full(surface(static_cast<long long>(state.range(0))).presentation)
                       .presentation;
  for (auto _ : state) {
    Presentation q = simplify(p);
    benchmark::DoNotOptimize(tcost(q));
  }
}
BENCHMARK(BM_Simplify)->Arg(4)->Arg(8);

void BM_LLL(benchmark::State& state) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> entry(-1000, 1000);
  LatticeBasis b;
  b.rank = 3;
  do {
    b.columns.assign(3, {});
    for (auto& col : b.columns) col = {Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng))};
  } while (covolume(b) == 0);
  for (auto _ : state) {
    LatticeBasis r = lll_reduce(b);
    benchmark::DoNotOptimize(r.columns[0][0]);
  }
}
BENCHMARK(BM_LLL);

void BM_TorusCover(benchmark::State& state) {
  const TorusCoverTemplate& tmpl = template_by_name("figure8");
  long long n = state.range(0);
  for (auto _ : state) {
    FamilyPoint pt = instantiate_torus_cover(tmpl, n, n);
    benchmark::DoNotOptimize(tcost(pt.presentation));
  }
}
BENCHMARK(BM_TorusCover)->Arg(10)->Arg(30);

void BM_Smith(benchmark::State& state) {
  std::mt19937 rng(54321);
  std::uniform_int_distribution<long long> entry(-99, 99);
  IntegerMatrix m = make_matrix(8, 8);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) {
    SmithForm s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(BM_Smith);

void BM_StableEstimate(benchmark::State& state) {
  Presentation p = surface(2).presentation;
  for (auto _ : state) {
    StableEstimate e = stable_upper_bound(p, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(e.best.index);
  }
}
BENCHMARK(BM_StableEstimate)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
