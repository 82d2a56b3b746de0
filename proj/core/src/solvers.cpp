#include "quasicover/solvers.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

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

void check_acp_shape(const Word& w, std::int32_t m) {
  if (m < 1 || m >= w.size()) throw InputError("tile length must lie in 1..|w|-1");
}

// Gaps permitted between consecutive placements of s: the tile length itself
// (placements touch) plus m - d for every proper legal overlap d. Ascending.
std::vector<std::int32_t> allowed_gaps(const Word& s) {
  OverlapSet legal = legal_overlaps(s);
  std::int32_t m = s.size();
  std::vector<std::int32_t> gaps;
  for (std::int32_t g = 1; g <= m; ++g) {
    if (g == m || legal.contains(m - g)) gaps.push_back(g);
  }
  return gaps;
}

// Digits of idx in base sigma, most significant first, as a tile. Index
// order is exactly lexicographic tile order.
Word tile_of_index(std::uint64_t idx, std::int32_t m, Symbol sigma) {
  std::vector<Symbol> syms(static_cast<std::size_t>(m));
  for (std::int32_t k = m - 1; k >= 0; --k) {
    syms[static_cast<std::size_t>(k)] = static_cast<Symbol>(idx % static_cast<std::uint64_t>(sigma));
    idx /= static_cast<std::uint64_t>(sigma);
  }
  return Word(std::move(syms), sigma);
}

std::int64_t count_matches(const Word& w, const Word& e) {
  std::int64_t matched = 0;
  for (std::int32_t i = 0; i < w.size(); ++i) {
    if (w[i] == e[i]) ++matched;
  }
  return matched;
}

CoverSolution finish_solution(const Word& w, Word tile, Tiling tiling, ExtCost distance) {
  Word e = expand(tile, tiling);
  CoverSolution s{std::move(tile), std::move(tiling), distance, count_matches(w, e)};
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::optional<std::pair<Tiling, Rational>> best_tiling_for_tile(
    const Word& w, const Word& s, const AdditiveMetric& metric) {
  std::int32_t n = w.size(), m = s.size();
  if (m < 1 || m > n) throw InputError("tile length must lie in 1..|w|");
  if (s.sigma() != w.sigma()) throw InputError("tile over a different alphabet");
  std::int32_t last = n + 1 - m;  // every tiling with this norm ends here
  auto gaps = allowed_gaps(s);

  // completion[j]: cheapest total cost of the positions first covered after a
  // placement at j, over all chains j -> ... -> last. Going backward lets the
  // forward walk below pick the lexicographically smallest optimal chain.
  std::vector<std::optional<Rational>> completion(static_cast<std::size_t>(last) + 1);
  completion[static_cast<std::size_t>(last)] = Rational(0);
  for (std::int32_t j = last - 1; j >= 1; --j) {
    std::optional<Rational> best;
    for (std::int32_t g : gaps) {
      std::int32_t i = j + g;
      if (i > last) break;
      const auto& tail = completion[static_cast<std::size_t>(i)];
      if (!tail) continue;
      // Fresh positions j+m..i+m-1, matched against the tile suffix.
      Rational c = metric.segment_cost(w, j + m, i + m - 1, s, m - g + 1) + *tail;
      if (!best || c < *best) best = c;
    }
    completion[static_cast<std::size_t>(j)] = best;
  }
  if (!completion[1]) return std::nullopt;

  std::vector<std::int32_t> starts{1};
  std::int32_t j = 1;
  while (j != last) {
    bool stepped = false;
    for (std::int32_t g : gaps) {
      std::int32_t i = j + g;
      if (i > last) break;
      const auto& tail = completion[static_cast<std::size_t>(i)];
      if (!tail) continue;
      Rational c = metric.segment_cost(w, j + m, i + m - 1, s, m - g + 1) + *tail;
      if (c == *completion[static_cast<std::size_t>(j)]) {
        starts.push_back(i);
        j = i;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InternalError("optimal alignment chain lost its continuation");
  }
  Rational total = metric.segment_cost(w, 1, m, s, 1) + *completion[1];
  return std::make_pair(Tiling{n, std::move(starts)}, total);
}

CoverSolution fpt_acp(const Word& w, std::int32_t m, const AdditiveMetric& metric,
                      const SolverLimits& limits, unsigned threads) {
  check_acp_shape(w, m);
  std::int32_t n = w.size();
  std::uint64_t candidates = sat_pow(static_cast<std::uint64_t>(w.sigma()), m);
  std::uint64_t per_tile = static_cast<std::uint64_t>(n + 1 - m) * static_cast<std::uint64_t>(m);
  std::uint64_t work = sat_mul(candidates, per_tile);
  if (work > limits.max_transitions) {
    throw BudgetError("tile scan needs about " + std::to_string(work) +
                      " transitions, over the cap of " + std::to_string(limits.max_transitions));
  }

  struct Best {
    bool has = false;
    std::uint64_t index = 0;
    Rational dist;
    Tiling tiling;
  };

  unsigned nthreads = std::max(1u, threads);
  if (static_cast<std::uint64_t>(nthreads) > candidates) {
    nthreads = static_cast<unsigned>(candidates);
  }
  std::vector<Best> slot(nthreads);

  auto scan = [&](std::uint64_t lo, std::uint64_t hi, Best& out) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Word s = tile_of_index(idx, m, w.sigma());
      auto r = best_tiling_for_tile(w, s, metric);
      if (!r) continue;
      if (!out.has || r->second < out.dist) {
        out = Best{true, idx, r->second, std::move(r->first)};
      }
    }
  };

  if (nthreads == 1) {
    scan(0, candidates, slot[0]);
  } else {
    std::uint64_t chunk = (candidates + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      std::uint64_t lo = chunk * t;
      std::uint64_t hi = std::min(candidates, lo + chunk);
      pool.emplace_back(scan, lo, hi, std::ref(slot[t]));
    }
    for (auto& th : pool) th.join();
  }

  // Reduce under the total order: distance first, then tile index, which is
  // tile lexicographic order. Identical for every thread count.
  const Best* best = nullptr;
  for (const Best& b : slot) {
    if (!b.has) continue;
    if (!best || b.dist < best->dist || (b.dist == best->dist && b.index < best->index)) {
      best = &b;
    }
  }
  if (!best) throw InternalError("no tile admits a tiling; the unary tile always does");
  return finish_solution(w, tile_of_index(best->index, m, w.sigma()), best->tiling,
                         ExtCost(best->dist));
}

std::optional<CoverSolution> fpt_acp_superadditive(
    const Word& w, std::int32_t m, const SuperadditiveMetric& metric,
    const Rational& tolerance, std::int32_t restarts, std::uint64_t seed,
    const SolverLimits& limits) {
  check_acp_shape(w, m);
  if (restarts < 1) throw InputError("at least one attempt is required");
  if (tolerance < Rational(0)) throw InputError("tolerance must be non-negative");
  std::int32_t n = w.size();
  std::int32_t last = n + 1 - m;
  std::uint64_t candidates = sat_pow(static_cast<std::uint64_t>(w.sigma()), m);
  std::uint64_t work = sat_mul(sat_mul(candidates, static_cast<std::uint64_t>(last) * m),
                               static_cast<std::uint64_t>(restarts));
  if (work > limits.max_transitions) {
    throw BudgetError("randomized scan needs about " + std::to_string(work) +
                      " transitions, over the cap of " + std::to_string(limits.max_transitions));
  }

  // Tolerance 0 asks for an exact cover; otherwise strictly under tolerance.
  auto tolerable = [&](const Rational& d) {
    return tolerance.is_zero() ? d.is_zero() : d < tolerance;
  };

  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Word s = tile_of_index(idx, m, w.sigma());
    auto gaps = allowed_gaps(s);
    std::vector<bool> gap_ok(static_cast<std::size_t>(m) + 1, false);
    for (std::int32_t g : gaps) gap_ok[static_cast<std::size_t>(g)] = true;

    // Decodes the chain ending at state j into its start sequence.
    std::vector<std::int32_t> pred(static_cast<std::size_t>(last) + 1, -1);
    auto chain_of = [&](std::int32_t j) {
      std::vector<std::int32_t> starts;
      for (std::int32_t x = j; x != 1; x = pred[static_cast<std::size_t>(x)]) starts.push_back(x);
      starts.push_back(1);
      std::reverse(starts.begin(), starts.end());
      return starts;
    };
    // Cost of the decoded chain extended by a placement at i, against the
    // prefix of w it covers. Superadditive distances have no per-position
    // split, so the whole prefix is evaluated each time.
    auto extended_cost = [&](std::int32_t j, std::int32_t i) {
      auto starts = chain_of(j);
      starts.push_back(i);
      Tiling t{i + m - 1, std::move(starts)};
      Word prefix = w.slice1(1, i + m - 1);
      return metric.distance(prefix, expand(s, t)).value();
    };

    for (std::int32_t r = 0; r < restarts; ++r) {
      std::mt19937_64 rng(splitmix64(seed + 0x100000001ULL * idx + static_cast<std::uint64_t>(r)));
      std::fill(pred.begin(), pred.end(), -1);
      pred[1] = 0;
      if (!tolerable(metric.distance(w.slice1(1, m), s.slice1(1, m)).value())) break;
      for (std::int32_t i = 2; i <= last; ++i) {
        std::vector<std::int32_t> eligible;
        for (std::int32_t j = std::max(1, i - m); j < i; ++j) {
          if (pred[static_cast<std::size_t>(j)] == -1) continue;
          if (!gap_ok[static_cast<std::size_t>(i - j)]) continue;
          if (tolerable(extended_cost(j, i))) eligible.push_back(j);
        }
        if (!eligible.empty()) {
          // Keep exactly one predecessor, chosen uniformly. rng() % k is
          // biased in theory but reproducible everywhere, which matters more
          // here.
          pred[static_cast<std::size_t>(i)] =
              eligible[static_cast<std::size_t>(rng() % eligible.size())];
        }
      }
      if (pred[static_cast<std::size_t>(last)] != -1) {
        Tiling t{n, chain_of(last)};
        ExtCost d = metric.distance(w, expand(s, t));
        return finish_solution(w, std::move(s), std::move(t), d);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::int32_t ceil_sqrt(std::int32_t n) {
  std::int32_t k = 1;
  while (k * k < n) ++k;
  return k;
}

CoverSolution hamming_solution(const Word& w, Word tile, Tiling tiling) {
  Word e = expand(tile, tiling);
  std::int64_t matched = count_matches(w, e);
  CoverSolution s{std::move(tile), std::move(tiling), ExtCost(Rational(w.size() - matched)),
                  matched};
  return s;
}

}  // namespace

Word best_tile_for_tiling(const Word& w, const Tiling& I) {
  std::int32_t m = I.norm();
  auto cls = tiling_equality_classes(I);
  std::int32_t k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<std::int64_t>> votes(
      static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(w.sigma()), 0));

  // Each word position votes once, through the latest placement covering it.
  std::size_t ti = 0;
  for (std::int32_t u = 1; u <= w.size(); ++u) {
    while (ti + 1 < I.starts.size() && I.starts[ti + 1] <= u) ++ti;
    std::int32_t offset = u - I.starts[ti];  // 0-based within the tile
    votes[static_cast<std::size_t>(cls[static_cast<std::size_t>(offset)])]
         [static_cast<std::size_t>(w.at1(u))]++;
  }

  std::vector<Symbol> winner(static_cast<std::size_t>(k), 0);
  for (std::int32_t c = 0; c < k; ++c) {
    std::int64_t best = -1;
    for (Symbol a = 0; a < w.sigma(); ++a) {
      if (votes[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] > best) {
        best = votes[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
        winner[static_cast<std::size_t>(c)] = a;  // ties fall to the smallest symbol
      }
    }
  }
  std::vector<Symbol> tile(static_cast<std::size_t>(m));
  for (std::int32_t j = 0; j < m; ++j) {
    tile[static_cast<std::size_t>(j)] = winner[static_cast<std::size_t>(cls[static_cast<std::size_t>(j)])];
  }
  return Word(std::move(tile), w.sigma());
}

CoverSolution approx_acp(const Word& w, std::int32_t m) {
  check_acp_shape(w, m);
  std::int32_t n = w.size();
  FreqTable freq = make_freq_table(w);
  Symbol alpha = freq.most_frequent;

  // The unary candidate is always available: the densest symbol repeated,
  // placed at every start. It matches exactly freq_max positions.
  std::vector<std::int32_t> dense;
  for (std::int32_t i = 1; i <= n + 1 - m; ++i) dense.push_back(i);
  CoverSolution best = hamming_solution(
      w, Word(std::vector<Symbol>(static_cast<std::size_t>(m), alpha), w.sigma()),
      Tiling{n, std::move(dense)});

  std::int32_t root = ceil_sqrt(n);
  if (m > root && m <= n / 3) {
    // Hybrid tile: alpha-runs of length ceil(m/3) wrapped around a verbatim
    // middle slice. Overlaps up to the run length stay legal, so gaps in
    // [m-a, m] are always usable and some total hits n exactly.
    std::int32_t a = (m + 2) / 3;
    std::vector<Symbol> syms(static_cast<std::size_t>(a), alpha);
    for (std::int32_t i = a + 1; i <= m - a; ++i) syms.push_back(w.at1(i));
    syms.insert(syms.end(), static_cast<std::size_t>(a), alpha);
    Word hybrid(std::move(syms), w.sigma());

    std::int32_t r = n - m;
    std::int32_t q = (r + m - 1) / m;  // number of gaps
    std::vector<std::int32_t> gap(static_cast<std::size_t>(q), m);
    std::int32_t deficit = q * m - r;
    for (std::int32_t i = 0; i < q && deficit > 0; ++i) {
      std::int32_t cut = std::min(a, deficit);
      gap[static_cast<std::size_t>(i)] -= cut;
      deficit -= cut;
    }
    if (deficit != 0) throw InternalError("hybrid gap distribution failed");
    std::vector<std::int32_t> starts{1};
    for (std::int32_t g : gap) starts.push_back(starts.back() + g);
    Tiling t{n, std::move(starts)};
    if (t.starts.back() != n + 1 - m || !is_valid_tiling(hybrid, t)) {
      throw InternalError("hybrid tiling is not valid");
    }
    CoverSolution c2 = hamming_solution(w, std::move(hybrid), std::move(t));
    if (solution_less(c2, best)) best = std::move(c2);
  } else if (m > n / 3) {
    // Short tilings are exhaustive here. Any tiling keeps a subset chain in
    // which every other pick advances more than m; with n - m <= 2m - 1 that
    // caps the chain at four starts, and dropping starts only drops equality
    // constraints, so the majority-vote tile never gets worse. Majority vote
    // per class is exact for Hamming.
    auto consider = [&](std::vector<std::int32_t> starts) {
      Tiling t{n, std::move(starts)};
      Word tile = best_tile_for_tiling(w, t);
      CoverSolution c = hamming_solution(w, std::move(tile), std::move(t));
      if (solution_less(c, best)) best = std::move(c);
    };
    std::int32_t r = n - m;
    if (r >= 1 && r <= m) consider({1, 1 + r});
    for (std::int32_t g1 = 1; g1 <= m; ++g1) {
      std::int32_t g2 = r - g1;
      if (g2 >= 1 && g2 <= m) consider({1, 1 + g1, 1 + g1 + g2});
      for (g2 = 1; g2 <= m; ++g2) {
        std::int32_t g3 = r - g1 - g2;
        if (g3 >= 1 && g3 <= m) consider({1, 1 + g1, 1 + g1 + g2, 1 + g1 + g2 + g3});
      }
    }
  }
  return best;
}

Rational efficiency(const Word& w, const CoverSolution& candidate,
                    const CoverSolution& optimum) {
  if (!candidate.distance.finite() || !optimum.distance.finite()) {
    throw InputError("efficiency needs finite distances");
  }
  Rational num = Rational(w.size()) - candidate.distance.value();
  Rational den = Rational(w.size()) - optimum.distance.value();
  if (!(den > Rational(0))) throw InternalError("optimum matches nothing");
  return num / den;
}

}  // namespace quasicover
