#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "quasicover/metrics.hpp"
#include "quasicover/solution.hpp"

namespace quasicover {

// Caps on solver work, measured in alignment transitions. Exceeding a cap
// raises BudgetError before any work is done.
struct SolverLimits {
  std::uint64_t max_transitions = 100'000'000;
};

// Cheapest valid tiling of w by the fixed tile s under an additive metric,
// with the lexicographically smallest tiling among the optima. Returns
// nullopt when no valid tiling exists for this tile (some tiles cannot
// produce the required overlaps).
std::optional<std::pair<Tiling, Rational>> best_tiling_for_tile(
    const Word& w, const Word& s, const AdditiveMetric& metric);

// Exact solver for a fixed tile length m: scans every candidate tile and
// keeps the best (distance, tile, tiling) under the shared tie-break order.
// Candidates may be scanned by several worker threads; the reduction applies
// the total order, so results are identical for any thread count.
CoverSolution fpt_acp(const Word& w, std::int32_t m, const AdditiveMetric& metric,
                      const SolverLimits& limits = {}, unsigned threads = 1);

// Randomized variant for superadditive distances. Each alignment state keeps
// one uniformly chosen predecessor whose decoded partial solution stays
// within the tolerance; on failure the scan restarts with fresh randomness,
// up to `restarts` attempts per tile. Finding nothing proves nothing.
// Tolerance semantics: a solution must have distance < tolerance, except
// that tolerance 0 asks for distance exactly 0.
std::optional<CoverSolution> fpt_acp_superadditive(
    const Word& w, std::int32_t m, const SuperadditiveMetric& metric,
    const Rational& tolerance, std::int32_t restarts, std::uint64_t seed,
    const SolverLimits& limits = {});

// Hamming-only approximation with a guaranteed efficiency ratio. Always
// considers the unary tile of the most frequent symbol; depending on m it
// additionally builds a hybrid tile or, for large m, searches the few
// possible short tilings exactly.
CoverSolution approx_acp(const Word& w, std::int32_t m);

// Best tile for a fixed tiling under Hamming: majority vote per equality
// class, ties to the smallest symbol.
Word best_tile_for_tiling(const Word& w, const Tiling& I);

// Ratio of matched positions: (|w| - d_candidate) / (|w| - d_optimum).
Rational efficiency(const Word& w, const CoverSolution& candidate,
                    const CoverSolution& optimum);

}  // namespace quasicover
