#pragma once

#include <string>

#include "quasicover/extended.hpp"
#include "quasicover/tiling.hpp"
#include "quasicover/word.hpp"

namespace quasicover {

// A tile together with a tiling of the input and the achieved distance.
// matched counts the positions where the expansion agrees with the input.
struct CoverSolution {
  Word tile;
  Tiling tiling;
  ExtCost distance;
  std::int64_t matched = 0;

  // Canonical single-line rendering; used for determinism checks.
  std::string canonical() const;
};

// The tie-break order shared by every solver: distance, then tile length,
// then tile symbols, then tiling starts.
bool solution_less(const CoverSolution& a, const CoverSolution& b);

}  // namespace quasicover
