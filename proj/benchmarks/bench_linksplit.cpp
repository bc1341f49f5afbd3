#include <benchmark/benchmark.h>

#include <random>

#include "linksplit/bounds.hpp"

using namespace linksplit;

namespace {

LinkDiagram load(const std::string& name) {
  for (const auto& e : read_link_table(LINKSPLIT_FIXTURES))
    if (e.name == name) return parse_pd(e.pd);
  throw Error("missing fixture " + name);
}

const char* kLinks[] = {"trefoil", "borromean", "link_7a6", "2n12_1705", "2n13_8862"};

template <Field F>
void BM_Build(benchmark::State& state) {
  const auto d = load(kLinks[state.range(0)]);
  const auto w = d.num_components() <= 2 ? default_weights<F>(d.num_components())
                                         : std::vector<F>(d.num_components(), F::from_int(1));
  for (auto _ : state) benchmark::DoNotOptimize(build(d, w).size());
  state.SetLabel(kLinks[state.range(0)]);
}

template <Field F>
void BM_Pages(benchmark::State& state) {
  const auto d = load(kLinks[state.range(0)]);
  const auto c = build(d, default_weights<F>(d.num_components()));
  for (auto _ : state) benchmark::DoNotOptimize(pages_by_cancellation(c).pages.size());
  state.SetLabel(std::string(kLinks[state.range(0)]) + ", " + std::to_string(c.size()) + " generators");
}

void BM_Khovanov(benchmark::State& state) {
  const auto d = load(kLinks[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(khovanov<F2>(d).rank());
  state.SetLabel(kLinks[state.range(0)]);
}

template <Field F>
void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::vector<std::tuple<Index, Index, F>> t;
  for (Index r = 0; r < n; ++r)
    for (int k = 0; k < 4; ++k) t.emplace_back(r, static_cast<Index>(rng() % n), F::from_int(1 + rng() % 7));
  const auto m = SparseMatrix<F>::from_triplets(n, n, std::move(t));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

}  // namespace

BENCHMARK(BM_Build<F2>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Khovanov)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pages<F2>)->Arg(0)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pages<GF4>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pages<Rational>)->Arg(0)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank<F2>)->Arg(256)->Arg(2048);
BENCHMARK(BM_Rank<Rational>)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
