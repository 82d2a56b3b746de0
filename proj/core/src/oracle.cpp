#include "quasicover/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "quasicover/tiling.hpp"

namespace quasicover {

namespace {

constexpr std::uint64_t kSatMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSatMax / b) return kSatMax;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::int32_t exp) {
  std::uint64_t acc = 1;
  for (std::int32_t i = 0; i < exp; ++i) acc = sat_mul(acc, base);
  return acc;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSatMax - b ? kSatMax : a + b;
}

// Enumerates every (tile, tiling) pair with this norm and folds it into best.
// Tiles constant on the equality classes of a tiling are exactly the tiles
// the tiling is valid for, so nothing else needs checking.
void scan_norm(const Word& w, std::int32_t m, const WordMetric& metric,
               std::optional<CoverSolution>& best) {
  for_each_tiling(w.size(), m, [&](const Tiling& I) {
    auto cls = tiling_equality_classes(I);
    std::int32_t k = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<Symbol> assign(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::vector<Symbol> syms(static_cast<std::size_t>(m));
      for (std::int32_t j = 0; j < m; ++j) {
        syms[static_cast<std::size_t>(j)] = assign[static_cast<std::size_t>(cls[static_cast<std::size_t>(j)])];
      }
      Word s(std::move(syms), w.sigma());
      Word e = expand(s, I);
      ExtCost d = metric.distance(w, e);
      std::int64_t matched = 0;
      for (std::int32_t i = 0; i < w.size(); ++i) {
        if (w[i] == e[i]) ++matched;
      }
      CoverSolution cand{std::move(s), I, d, matched};
      if (!best || solution_less(cand, *best)) best = std::move(cand);

      std::int32_t pos = k - 1;
      while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == w.sigma() - 1) {
        assign[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++assign[static_cast<std::size_t>(pos)];
    }
  });
}

std::uint64_t norm_work(const Word& w, std::int32_t m) {
  return sat_mul(count_tilings(w.size(), m), sat_pow(static_cast<std::uint64_t>(w.sigma()), m));
}

}  // namespace

CoverSolution brute_force_oracle(const Word& w, std::int32_t m, const WordMetric& metric,
                                 const SolverLimits& limits) {
  if (m < 1 || m >= w.size()) throw InputError("tile length must lie in 1..|w|-1");
  std::uint64_t work = norm_work(w, m);
  if (work > limits.max_transitions) {
    throw BudgetError("exhaustive search needs about " + std::to_string(work) +
                      " candidates, over the cap of " + std::to_string(limits.max_transitions));
  }
  std::optional<CoverSolution> best;
  scan_norm(w, m, metric, best);
  if (!best) throw InternalError("no tiling of this norm exists");
  return *best;
}

CoverSolution brute_force_general(const Word& w, const WordMetric& metric,
                                  const SolverLimits& limits) {
  if (w.size() < 2) throw InputError("word must have length at least 2");
  std::uint64_t work = 0;
  for (std::int32_t m = 1; m < w.size(); ++m) work = sat_add(work, norm_work(w, m));
  if (work > limits.max_transitions) {
    throw BudgetError("exhaustive search needs about " + std::to_string(work) +
                      " candidates, over the cap of " + std::to_string(limits.max_transitions));
  }
  // Scanning norms in increasing order plus the strict comparison implements
  // the nested arg-min: distance first, then tile length, then lexicographic.
  std::optional<CoverSolution> best;
  for (std::int32_t m = 1; m < w.size(); ++m) scan_norm(w, m, metric, best);
  if (!best) throw InternalError("no tiling exists for any norm");
  return *best;
}

}  // namespace quasicover
