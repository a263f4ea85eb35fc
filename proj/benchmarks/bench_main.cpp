#include "schottky/certificate.hpp"
#include "schottky/explorer.hpp"

#include <benchmark/benchmark.h>

using namespace schottky;

namespace {

void BM_EnumerateWords(benchmark::State& state) {
  const WordWindow window{2, 6};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_word(window, n, std::nullopt, [&](const ReducedWord&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * reduced_word_count(6, n)));
}
BENCHMARK(BM_EnumerateWords)->DenseRange(2, 5);

template <Scalar T>
void BM_WordDisk(benchmark::State& state) {
  const auto s = paper_schedule(8);
  const auto words = enumerate_words({2, 6}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(word_disk<T>(s, w));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_WordDisk<Rational>)->Arg(2)->Arg(4);
BENCHMARK(BM_WordDisk<Interval>)->Arg(2)->Arg(4);

void BM_AlphaSum(benchmark::State& state) {
  const auto s = paper_schedule(8);
  SumOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_sum(s, {2, 6}, static_cast<std::size_t>(state.range(0)), Rational(1, 4), options));
  }
}
BENCHMARK(BM_AlphaSum)->Args({3, 1})->Args({4, 1})->Args({4, 4});

void BM_Certify(benchmark::State& state) {
  const auto s = paper_schedule(10);
  for (auto _ : state) benchmark::DoNotOptimize(certify_dimension_upper(s, {}));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

void BM_ConicalityProfile(benchmark::State& state) {
  const auto s = paper_schedule(8);
  const OrbitBall ball(s, {0, 6}, HPoint<Rational>(Rational(0), Rational(1)), 3);
  const auto lp = limit_point(s, WordPath::periodic(ReducedWord{1, 2}), 12);
  const auto lambda = BoundaryPoint<Interval>::finite(Interval(lp.center));
  for (auto _ : state) benchmark::DoNotOptimize(conicality_profile(ball, lambda, Rational(10), Rational(1, 4)));
}
BENCHMARK(BM_ConicalityProfile)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
