// Serial reference against the OpenMP kernels. Run with --benchmark_filter to narrow;
// thread counts above the core count only measure scheduling overhead.

#include "ortho/graph_core.hpp"
#include "ortho/kernels.hpp"
#include "ortho/maxind_search.hpp"
#include "ortho/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ortho;
namespace serial = ortho::kernels::serial;
namespace parallel = ortho::kernels::parallel;

namespace {

struct AdjacencyInput {
  int n;
  std::vector<std::int64_t> values;
  std::vector<Word> masks;
  std::vector<Word> rows;
  explicit AdjacencyInput(int n_) : n(n_), masks(neighbour_masks(n_)) {
    std::mt19937_64 rng(1);
    values.resize(std::size_t{1} << n);
    for (auto& v : values) v = static_cast<std::int64_t>(rng() % 2);
    rows.resize(values.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  }
};

const kernels::ScaledColumns& columns16() {
  static const auto c = kernels::ScaledColumns::from(reduce(16).c);
  return c;
}

void BM_ApplyAdjacencySerial(benchmark::State& st) {
  const AdjacencyInput in(static_cast<int>(st.range(0)));
  std::vector<std::int64_t> out(in.values.size());
  for (auto _ : st) {
    serial::apply_adjacency(in.values, in.masks, in.rows, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ApplyAdjacencyParallel(benchmark::State& st) {
  const AdjacencyInput in(static_cast<int>(st.range(0)));
  std::vector<std::int64_t> out(in.values.size());
  for (auto _ : st) {
    parallel::apply_adjacency(in.values, in.masks, in.rows, out, static_cast<int>(st.range(1)));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ScanSerial(benchmark::State& st) {
  const auto& c = columns16();
  for (auto _ : st) benchmark::DoNotOptimize(serial::scan_candidates(c, 0, 1U << 14));
}

void BM_ScanParallel(benchmark::State& st) {
  const auto& c = columns16();
  for (auto _ : st) benchmark::DoNotOptimize(parallel::scan_candidates(c, 0, 1U << 14, static_cast<int>(st.range(0))));
}

std::vector<Word> tight_lift16() {
  std::vector<Word> w;
  for (Word x = 0; x <= full_mask(16); ++x)
    if (weight(x) < 4 && weight(x) % 2 == 1) {
      w.push_back(x);
      w.push_back(x ^ full_mask(16));
    }
  return w;
}

void BM_AdjacentPairSerial(benchmark::State& st) {
  const auto w = tight_lift16();
  for (auto _ : st) benchmark::DoNotOptimize(serial::adjacent_pair(w, 16));
}

void BM_AdjacentPairParallel(benchmark::State& st) {
  const auto w = tight_lift16();
  for (auto _ : st) benchmark::DoNotOptimize(parallel::adjacent_pair(w, 16, static_cast<int>(st.range(0))));
}

void BM_RankSerial(benchmark::State& st) {
  const auto m = build_Nhat(12, VertexWord(0, 12));
  for (auto _ : st) benchmark::DoNotOptimize(serial::rank(m));
}

void BM_RankParallel(benchmark::State& st) {
  const auto m = build_Nhat(12, VertexWord(0, 12));
  for (auto _ : st) benchmark::DoNotOptimize(parallel::rank(m, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_ApplyAdjacencySerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyAdjacencyParallel)->ArgsProduct({{12, 16}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AdjacentPairSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacentPairParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RankSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
