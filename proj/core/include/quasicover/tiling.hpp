#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quasicover/word.hpp"

namespace quasicover {

// Start positions of tile placements inside a word of length n. Starts are
// 1-based, strictly increasing, begin at 1, and consecutive gaps never exceed
// the norm, so the placements cover every position.
struct Tiling {
  std::int32_t n = 0;
  std::vector<std::int32_t> starts;

  // Length of the tile these starts are meant for: the last placement must
  // end exactly at position n.
  std::int32_t norm() const { return n + 1 - starts.back(); }
  std::int32_t tile_count() const { return static_cast<std::int32_t>(starts.size()); }

  // Validating factory; throws InputError on a malformed shape.
  static Tiling create(std::int32_t n, std::vector<std::int32_t> starts);

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.n == b.n && a.starts == b.starts;
  }
};

// The overlap lengths d for which a length-d prefix of the tile equals a
// length-d suffix. The full tile length is always a member.
struct OverlapSet {
  std::int32_t tile_length = 0;
  std::vector<bool> legal;  // legal[d-1] for d in 1..tile_length

  bool contains(std::int32_t d) const {
    return d >= 1 && d <= tile_length && legal[static_cast<std::size_t>(d - 1)];
  }
  std::vector<std::int32_t> values() const;
};

// Longest proper border of every prefix (classic failure function).
std::vector<std::int32_t> border_array(const Word& s);

OverlapSet legal_overlaps(const Word& s);

// True when every pair of consecutive placements of s at I either merely
// touch or overlap by a legal amount. Throws InputError if |s| != norm.
bool is_valid_tiling(const Word& s, const Tiling& I);

// The word obtained by writing s at every start. Throws InputError on the
// first conflicting overlap of an invalid tiling.
Word expand(const Word& s, const Tiling& I);

// Partition of tile offsets (0-based) forced equal by the overlaps of I.
// Returns a class id per offset; ids are dense and ordered by first offset.
std::vector<std::int32_t> tiling_equality_classes(const Tiling& I);

// Enumerates every tiling of a length-n word with norm m, in lexicographic
// order of the start sequences.
void for_each_tiling(std::int32_t n, std::int32_t m,
                     const std::function<void(const Tiling&)>& fn);

// Number of such tilings, saturating at UINT64_MAX.
std::uint64_t count_tilings(std::int32_t n, std::int32_t m);

}  // namespace quasicover
