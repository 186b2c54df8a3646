#include <benchmark/benchmark.h>

#include <random>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/lyndon_bijections.hpp"
#include "fixmahon/perm_bijections.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/word_core.hpp"

using namespace fixmahon;

namespace {

std::vector<Word> random_words(std::size_t count, std::size_t length, Letter r) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Letter> d(0, r);
  std::vector<Word> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Letter> v(length);
    for (auto& x : v) x = d(rng);
    out.emplace_back(v);
  }
  return out;
}

void BM_LyndonFactorize(benchmark::State& state) {
  auto words = random_words(256, static_cast<std::size_t>(state.range(0)), 9);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lyndon_factorize(words[k++ % words.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LyndonFactorize)->Arg(8)->Arg(64)->Arg(512);

void BM_PhiFixRoundTrip(benchmark::State& state) {
  const Letter r = 6;
  auto words = random_words(256, static_cast<std::size_t>(state.range(0)), r);
  std::size_t k = 0;
  for (auto _ : state) {
    const Word& w = words[k++ % words.size()];
    benchmark::DoNotOptimize(phi_fix(phi_fix_inverse(w, r), r));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiFixRoundTrip)->Arg(8)->Arg(22)->Arg(64);

void BM_TransformF(benchmark::State& state) {
  const Letter r = 6;
  auto words = random_words(256, static_cast<std::size_t>(state.range(0)), r);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(transform_f(words[k++ % words.size()], r));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TransformF)->Arg(8)->Arg(22)->Arg(64);

void BM_PsiFix(benchmark::State& state) {
  const Letter r = 6;
  auto words = random_words(256, static_cast<std::size_t>(state.range(0)), r);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(psi_fix(words[k++ % words.size()], r));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PsiFix)->Arg(8)->Arg(22)->Arg(64);

void BM_PermStatsOverSymmetricGroup(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for_each_permutation(n, [&](const Permutation& sigma) { total += perm_stats(sigma).lec; });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_PermStatsOverSymmetricGroup)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ExpandC(benchmark::State& state) {
  const auto method = state.range(1) ? ExpansionMethod::geometric : ExpansionMethod::direct;
  for (auto _ : state) benchmark::DoNotOptimize(expand_c(3, static_cast<std::size_t>(state.range(0)), method));
}
BENCHMARK(BM_ExpandC)->Args({5, 0})->Args({5, 1})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

void BM_ExtractAn(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto bank = expand_c_bank(n, n);
    benchmark::DoNotOptimize(extract_an(n, bank));
  }
}
BENCHMARK(BM_ExtractAn)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
