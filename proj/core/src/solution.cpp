#include "quasicover/solution.hpp"

namespace quasicover {

std::string CoverSolution::canonical() const {
  std::string out = "tile=";
  for (std::size_t i = 0; i < tile.symbols().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tile.symbols()[i]);
  }
  out += ";tiling=";
  for (std::size_t i = 0; i < tiling.starts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tiling.starts[i]);
  }
  out += ";distance=" + distance.str();
  out += ";matched=" + std::to_string(matched);
  return out;
}

bool solution_less(const CoverSolution& a, const CoverSolution& b) {
  if (a.distance < b.distance) return true;
  if (b.distance < a.distance) return false;
  if (a.tile.size() != b.tile.size()) return a.tile.size() < b.tile.size();
  if (a.tile.symbols() != b.tile.symbols()) return a.tile.symbols() < b.tile.symbols();
  return a.tiling.starts < b.tiling.starts;
}

}  // namespace quasicover
