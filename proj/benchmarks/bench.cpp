#include <benchmark/benchmark.h>

#include <random>

#include "quasicover/quasicover.hpp"

namespace qc = quasicover;

namespace {

// Quasi-periodic text: repeated "abaab" with occasional substitutions, so the
// border structure stays rich but not degenerate.
qc::Word structured_word(std::int32_t n, qc::Symbol sigma) {
  static const qc::Symbol pat[] = {0, 1, 0, 0, 1};
  std::mt19937_64 rng(42);
  std::vector<qc::Symbol> syms(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    syms[static_cast<std::size_t>(i)] =
        rng() % 16 == 0 ? static_cast<qc::Symbol>(rng() % sigma) : pat[i % 5];
  }
  return qc::Word(std::move(syms), sigma);
}

}  // namespace

static void BM_LegalOverlaps(benchmark::State& state) {
  qc::Word w = structured_word(static_cast<std::int32_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qc::legal_overlaps(w));
  }
}
BENCHMARK(BM_LegalOverlaps)->Range(256, 16384);

static void BM_ShortestCover(benchmark::State& state) {
  qc::Word w = structured_word(static_cast<std::int32_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qc::shortest_cover(w));
  }
}
BENCHMARK(BM_ShortestCover)->Range(256, 4096);

static void BM_BestTilingForTile(benchmark::State& state) {
  qc::Word w = structured_word(static_cast<std::int32_t>(state.range(0)), 2);
  qc::Word s = w.slice1(1, 8);
  qc::HammingMetric hamming;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qc::best_tiling_for_tile(w, s, hamming));
  }
}
BENCHMARK(BM_BestTilingForTile)->Range(256, 4096);

static void BM_FptAcp(benchmark::State& state) {
  qc::Word w = structured_word(64, 2);
  qc::HammingMetric hamming;
  std::int32_t m = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qc::fpt_acp(w, m, hamming));
  }
}
BENCHMARK(BM_FptAcp)->DenseRange(2, 10, 2);

static void BM_OracleSmall(benchmark::State& state) {
  qc::Word w = structured_word(static_cast<std::int32_t>(state.range(0)), 2);
  qc::HammingMetric hamming;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qc::brute_force_oracle(w, 3, hamming));
  }
}
BENCHMARK(BM_OracleSmall)->DenseRange(8, 14, 2);

static void BM_PsiRoundtrip(benchmark::State& state) {
  qc::BlockCodeParams params(static_cast<std::int32_t>(state.range(0)));
  for (auto _ : state) {
    for (std::uint64_t x = 0; x < 512; ++x) {
      std::vector<qc::Symbol> code = qc::psi_encode(x * 911, params);
      benchmark::DoNotOptimize(qc::psi_decode(code, params));
    }
  }
}
BENCHMARK(BM_PsiRoundtrip)->Arg(5)->Arg(10);

BENCHMARK_MAIN();
