#include "quasicover/cover.hpp"

#include <algorithm>

namespace quasicover {

std::vector<std::int32_t> z_function(const std::vector<Symbol>& v) {
  std::int32_t n = static_cast<std::int32_t>(v.size());
  std::vector<std::int32_t> z(static_cast<std::size_t>(n), 0);
  if (n == 0) return z;
  z[0] = n;
  std::int32_t l = 0, r = 0;
  for (std::int32_t i = 1; i < n; ++i) {
    std::int32_t k = 0;
    if (i < r) k = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
    while (i + k < n && v[static_cast<std::size_t>(k)] == v[static_cast<std::size_t>(i + k)]) ++k;
    z[static_cast<std::size_t>(i)] = k;
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
  return z;
}

std::optional<Tiling> is_cover(const Word& c, const Word& w) {
  std::int32_t m = c.size(), n = w.size();
  if (m > n) throw InputError("candidate cover longer than the word");
  if (c.sigma() != w.sigma()) throw InputError("candidate cover over a different alphabet");

  // Occurrences via one Z pass over c # w.
  std::vector<Symbol> joined;
  joined.reserve(static_cast<std::size_t>(m + 1 + n));
  joined.insert(joined.end(), c.symbols().begin(), c.symbols().end());
  joined.push_back(-1);
  joined.insert(joined.end(), w.symbols().begin(), w.symbols().end());
  auto z = z_function(joined);

  std::vector<std::int32_t> occ;
  for (std::int32_t i = 1; i + m - 1 <= n; ++i) {
    if (z[static_cast<std::size_t>(m + i)] >= m) occ.push_back(i);
  }
  if (occ.empty() || occ.front() != 1 || occ.back() != n - m + 1) return std::nullopt;
  for (std::size_t i = 1; i < occ.size(); ++i) {
    if (occ[i] - occ[i - 1] > m) return std::nullopt;
  }
  return Tiling{n, std::move(occ)};
}

Word shortest_cover(const Word& w) {
  for (std::int32_t m = 1; m < w.size(); ++m) {
    if (is_cover(w.slice1(1, m), w)) return w.slice1(1, m);
  }
  return w;
}

}  // namespace quasicover
