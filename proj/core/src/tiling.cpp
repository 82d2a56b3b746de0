#include "quasicover/tiling.hpp"

#include <limits>

namespace quasicover {

Tiling Tiling::create(std::int32_t n, std::vector<std::int32_t> starts) {
  if (n < 1) throw InputError("tiling over an empty word");
  if (starts.empty()) throw InputError("a tiling needs at least one start");
  if (starts.front() != 1) throw InputError("the first start must be 1");
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (starts[i] < 1 || starts[i] > n) {
      throw InputError("start " + std::to_string(starts[i]) + " outside 1.." + std::to_string(n));
    }
    if (i > 0 && starts[i] <= starts[i - 1]) throw InputError("starts must strictly increase");
  }
  Tiling t{n, std::move(starts)};
  std::int32_t m = t.norm();
  if (m < 1) throw InputError("norm must be positive");
  for (std::size_t i = 1; i < t.starts.size(); ++i) {
    if (t.starts[i] - t.starts[i - 1] > m) {
      throw InputError("gap after start " + std::to_string(t.starts[i - 1]) +
                       " exceeds the norm " + std::to_string(m));
    }
  }
  return t;
}

std::vector<std::int32_t> OverlapSet::values() const {
  std::vector<std::int32_t> v;
  for (std::int32_t d = 1; d <= tile_length; ++d) {
    if (legal[static_cast<std::size_t>(d - 1)]) v.push_back(d);
  }
  return v;
}

std::vector<std::int32_t> border_array(const Word& s) {
  std::int32_t m = s.size();
  std::vector<std::int32_t> f(static_cast<std::size_t>(m), 0);
  for (std::int32_t i = 1; i < m; ++i) {
    std::int32_t k = f[static_cast<std::size_t>(i - 1)];
    while (k > 0 && s[i] != s[k]) k = f[static_cast<std::size_t>(k - 1)];
    if (s[i] == s[k]) ++k;
    f[static_cast<std::size_t>(i)] = k;
  }
  return f;
}

OverlapSet legal_overlaps(const Word& s) {
  std::int32_t m = s.size();
  OverlapSet o;
  o.tile_length = m;
  o.legal.assign(static_cast<std::size_t>(m), false);
  o.legal[static_cast<std::size_t>(m - 1)] = true;  // the whole tile
  auto f = border_array(s);
  for (std::int32_t b = f[static_cast<std::size_t>(m - 1)]; b > 0; b = f[static_cast<std::size_t>(b - 1)]) {
    o.legal[static_cast<std::size_t>(b - 1)] = true;
  }
  return o;
}

bool is_valid_tiling(const Word& s, const Tiling& I) {
  std::int32_t m = I.norm();
  if (s.size() != m) {
    throw InputError("tile length " + std::to_string(s.size()) +
                     " does not match the tiling norm " + std::to_string(m));
  }
  OverlapSet legal = legal_overlaps(s);
  for (std::size_t i = 1; i < I.starts.size(); ++i) {
    std::int32_t o = I.starts[i - 1] + m - I.starts[i];
    if (o > 0 && !legal.contains(o)) return false;
  }
  return true;
}

Word expand(const Word& s, const Tiling& I) {
  std::int32_t m = I.norm();
  if (s.size() != m) {
    throw InputError("tile length " + std::to_string(s.size()) +
                     " does not match the tiling norm " + std::to_string(m));
  }
  // Check overlaps directly so the error can point at the first conflict.
  for (std::size_t i = 1; i < I.starts.size(); ++i) {
    std::int32_t gap = I.starts[i] - I.starts[i - 1];
    std::int32_t o = m - gap;
    for (std::int32_t j = 1; j <= o; ++j) {
      if (s.at1(j) != s.at1(gap + j)) {
        throw InputError("tile conflicts with itself between starts " +
                         std::to_string(I.starts[i - 1]) + " and " + std::to_string(I.starts[i]) +
                         ": overlap length " + std::to_string(o) + ", tile position " +
                         std::to_string(gap + j) + " vs " + std::to_string(j));
      }
    }
  }
  std::vector<Symbol> out(static_cast<std::size_t>(I.n), -1);
  for (std::int32_t start : I.starts) {
    for (std::int32_t j = 1; j <= m; ++j) out[static_cast<std::size_t>(start + j - 2)] = s.at1(j);
  }
  for (Symbol v : out) {
    if (v < 0) throw InternalError("tiling left a position uncovered");
  }
  return Word(std::move(out), s.sigma());
}

namespace {

struct Dsu {
  std::vector<std::int32_t> parent;
  explicit Dsu(std::int32_t k) : parent(static_cast<std::size_t>(k)) {
    for (std::int32_t i = 0; i < k; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::int32_t> tiling_equality_classes(const Tiling& I) {
  std::int32_t m = I.norm();
  Dsu dsu(m);
  for (std::size_t i = 1; i < I.starts.size(); ++i) {
    std::int32_t gap = I.starts[i] - I.starts[i - 1];
    for (std::int32_t j = 0; j + gap < m; ++j) dsu.unite(j, j + gap);
  }
  std::vector<std::int32_t> cls(static_cast<std::size_t>(m), -1);
  std::int32_t next = 0;
  for (std::int32_t j = 0; j < m; ++j) {
    std::int32_t r = dsu.find(j);
    if (cls[static_cast<std::size_t>(r)] == -1) cls[static_cast<std::size_t>(r)] = next++;
    cls[static_cast<std::size_t>(j)] = cls[static_cast<std::size_t>(r)];
  }
  return cls;
}

namespace {

void tilings_rec(std::int32_t target, std::int32_t m, std::vector<std::int32_t>& starts,
                 std::int32_t n, const std::function<void(const Tiling&)>& fn) {
  std::int32_t cur = starts.back();
  if (cur == target) {
    fn(Tiling{n, starts});
    return;
  }
  for (std::int32_t g = 1; g <= m && cur + g <= target; ++g) {
    starts.push_back(cur + g);
    tilings_rec(target, m, starts, n, fn);
    starts.pop_back();
  }
}

}  // namespace

void for_each_tiling(std::int32_t n, std::int32_t m,
                     const std::function<void(const Tiling&)>& fn) {
  if (m < 1 || m > n) throw InputError("norm outside 1..n");
  std::int32_t target = n + 1 - m;
  std::vector<std::int32_t> starts{1};
  tilings_rec(target, m, starts, n, fn);
}

std::uint64_t count_tilings(std::int32_t n, std::int32_t m) {
  if (m < 1 || m > n) throw InputError("norm outside 1..n");
  std::int32_t target = n + 1 - m;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[1] = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::int32_t i = 2; i <= target; ++i) {
    std::uint64_t acc = 0;
    for (std::int32_t g = 1; g <= m && g < i; ++g) {
      std::uint64_t w = ways[static_cast<std::size_t>(i - g)];
      acc = (acc > kMax - w) ? kMax : acc + w;
    }
    ways[static_cast<std::size_t>(i)] = acc;
  }
  return ways[static_cast<std::size_t>(target)];
}

}  // namespace quasicover
