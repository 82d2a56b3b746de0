#pragma once

#include <optional>

#include "quasicover/tiling.hpp"
#include "quasicover/word.hpp"

namespace quasicover {

// Longest common prefix of w and each of its suffixes.
std::vector<std::int32_t> z_function(const std::vector<Symbol>& v);

// If every position of w lies inside an occurrence of c, returns the full
// occurrence set as a tiling; otherwise nullopt.
std::optional<Tiling> is_cover(const Word& c, const Word& w);

// The shortest cover of w. Only prefixes of w can cover it, so this scans
// prefix lengths upward; w itself is returned when no proper cover exists.
Word shortest_cover(const Word& w);

}  // namespace quasicover
