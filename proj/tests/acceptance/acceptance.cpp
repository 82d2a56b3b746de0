// Acceptance gate: one line per criterion, exit code = number of failures.
// Budgets quoted in the lines are informational; correctness is what gates.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quasicover/quasicover.hpp"

using namespace quasicover;

namespace {

std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0xacce97ull * 2654435761ull + salt); }

Word random_word(std::mt19937_64& rng, std::int32_t n, Symbol sigma) {
  std::vector<Symbol> syms(static_cast<std::size_t>(n));
  for (auto& s : syms) s = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma));
  return Word(std::move(syms), sigma);
}

// --- criterion 1: exact solver == enumeration oracle -----------------------

bool criterion_oracle_equiv(std::string& detail) {
  suites::SuiteSummary sum = suites::run_oracle_equiv({});
  detail = std::to_string(sum.total) + " cases, " + std::to_string(sum.failed) + " failed";
  return sum.ok() && sum.total > 0;
}

// --- criteria 2 and 3: approximation bounds, large-tile exactness ----------

struct ApproxTally {
  int bounds_total = 0, bounds_failed = 0;
  int case3_total = 0, case3_failed = 0;
};

ApproxTally tally_approx() {
  ApproxTally t;
  suites::run_approx_ratio([&](const suites::CaseResult& c) {
    if (c.id.rfind("bounds/", 0) == 0) {
      ++t.bounds_total;
      if (!c.pass) ++t.bounds_failed;
    } else if (c.id.rfind("case3/", 0) == 0) {
      ++t.case3_total;
      if (!c.pass) ++t.case3_failed;
    }
  });
  return t;
}

bool criterion_approx_bounds(std::string& detail) {
  ApproxTally t = tally_approx();
  detail = std::to_string(t.bounds_total) + " instances, " +
           std::to_string(t.bounds_failed) + " failed";
  return t.bounds_total == 1000 && t.bounds_failed == 0;
}

bool criterion_case3_exact(std::string& detail) {
  ApproxTally t = tally_approx();
  detail = std::to_string(t.case3_total) + " large-tile instances, " +
           std::to_string(t.case3_failed) + " failed";
  return t.case3_total > 0 && t.case3_failed == 0;
}

// --- criterion 4: shortest cover vs first-principles enumeration -----------

bool covers_naively(const std::vector<Symbol>& c, const std::vector<Symbol>& w) {
  const std::size_t m = c.size(), n = w.size();
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i + m <= n; ++i) {
    bool occ = true;
    for (std::size_t j = 0; j < m && occ; ++j) occ = w[i + j] == c[j];
    if (occ) {
      for (std::size_t j = 0; j < m; ++j) hit[i + j] = 1;
    }
  }
  for (char h : hit) {
    if (!h) return false;
  }
  return true;
}

bool criterion_scp(std::string& detail) {
  long checked = 0, wrong = 0;
  for (std::int32_t n = 1; n <= 14; ++n) {
    std::vector<Symbol> syms(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (std::int32_t i = 0; i < n; ++i) syms[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      Word w(syms, 2);
      std::vector<Symbol> naive;
      for (std::int32_t len = 1; len <= n; ++len) {
        std::vector<Symbol> prefix(syms.begin(), syms.begin() + len);
        if (covers_naively(prefix, syms)) {
          naive = prefix;
          break;
        }
      }
      ++checked;
      if (shortest_cover(w).symbols() != naive) ++wrong;
    }
  }
  bool classic = shortest_cover(word_from_text("abaabaabaaba")) == word_from_text("aba");
  detail = std::to_string(checked) + " binary words, " + std::to_string(wrong) +
           " wrong, classic " + (classic ? "ok" : "bad");
  return wrong == 0 && classic;
}

// --- criterion 5: pseudometric pipeline vs direct oracle -------------------

PseudometricTable random_table(std::mt19937_64& rng, std::int32_t sigma) {
  // random surjection onto class ids, then positive rational distances
  // between classes, closed under min-plus so the triangle axiom holds
  std::vector<std::int32_t> cls(static_cast<std::size_t>(sigma));
  std::int32_t k = 0;
  for (std::int32_t a = 0; a < sigma; ++a) {
    std::int32_t c = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(k + 1));
    cls[static_cast<std::size_t>(a)] = c;
    if (c == k) ++k;
  }
  std::vector<std::vector<Rational>> base(static_cast<std::size_t>(k),
                                          std::vector<Rational>(static_cast<std::size_t>(k)));
  for (std::int32_t i = 0; i < k; ++i) {
    for (std::int32_t j = i + 1; j < k; ++j) {
      Rational d(static_cast<std::int64_t>(1 + rng() % 8),
                 static_cast<std::int64_t>(1 + rng() % 2));
      base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
      base[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
    }
  }
  for (std::int32_t via = 0; via < k; ++via) {
    for (std::int32_t i = 0; i < k; ++i) {
      for (std::int32_t j = 0; j < k; ++j) {
        if (i == j) continue;
        Rational thru = base[static_cast<std::size_t>(i)][static_cast<std::size_t>(via)] +
                        base[static_cast<std::size_t>(via)][static_cast<std::size_t>(j)];
        if (via != i && via != j && thru < base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = thru;
        }
      }
    }
  }
  PseudometricTable t;
  t.d.assign(static_cast<std::size_t>(sigma), std::vector<Rational>(static_cast<std::size_t>(sigma)));
  for (std::int32_t a = 0; a < sigma; ++a) {
    t.labels.push_back(std::string(1, static_cast<char>('a' + a)));
    for (std::int32_t b = 0; b < sigma; ++b) {
      if (cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)]) {
        t.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            base[static_cast<std::size_t>(cls[static_cast<std::size_t>(a)])]
                [static_cast<std::size_t>(cls[static_cast<std::size_t>(b)])];
      }
    }
  }
  return t;
}

bool criterion_pseudometric(std::string& detail) {
  auto rng = rng_for(5);
  int failed = 0;
  for (int t = 0; t < 200; ++t) {
    std::int32_t sigma = 2 + static_cast<std::int32_t>(rng() % 4);
    PseudometricTable table = random_table(rng, sigma);
    if (!validate_pseudometric(table).empty()) {
      ++failed;
      continue;
    }
    std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 8);
    Word w = random_word(rng, n, sigma);
    std::int32_t m = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(std::min(3, n - 1)));
    CoverSolution lifted = acp_pseudometric(w, m, table);
    CoverSolution direct = brute_force_oracle(w, m, TableMetric(table));
    if (lifted.distance != direct.distance) ++failed;
  }
  detail = "200 table/word pairs, " + std::to_string(failed) + " failed";
  return failed == 0;
}

// --- criterion 6: block codec ----------------------------------------------

bool criterion_codec(std::string& detail) {
  suites::SuiteSummary sum = suites::run_codec({});
  detail = std::to_string(sum.total) + " cases, " + std::to_string(sum.failed) +
           " failed; " + sum.note;
  return sum.ok() && sum.total == 300003;
}

// --- criterion 7: block-coded instances agree with the originals -----------

bool criterion_block_equiv(std::string& detail) {
  const BlockCodeParams params{5};
  HammingMetric hamming;
  long checked = 0, failed = 0;
  for (std::int32_t n = 2; n <= 6; ++n) {
    std::vector<Symbol> syms(static_cast<std::size_t>(n), 0);
    for (;;) {
      Word w(syms, 4);
      for (std::int32_t m = 1; m <= 2 && m < n; ++m) {
        ++checked;
        if (!block_acp_check(w, m, hamming, params).passed) ++failed;
      }
      std::int32_t i = n - 1;
      while (i >= 0 && syms[static_cast<std::size_t>(i)] == 3) {
        syms[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++syms[static_cast<std::size_t>(i)];
    }
  }
  detail = std::to_string(checked) + " instances, " + std::to_string(failed) + " failed";
  return checked > 0 && failed == 0;
}

// --- criterion 8: lemma-level properties ------------------------------------

bool criterion_lemmas(std::string& detail) {
  auto rng = rng_for(8);
  long failed = 0;

  // overlap sets only grow when a substitution merges symbols
  for (int t = 0; t < 10000; ++t) {
    std::int32_t sigma = 2 + static_cast<std::int32_t>(rng() % 3);
    std::int32_t len = 1 + static_cast<std::int32_t>(rng() % 12);
    Word s = random_word(rng, len, sigma);
    Symbol alpha = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma));
    Symbol beta = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma));
    std::vector<Symbol> repl = s.symbols();
    for (auto& x : repl) {
      if (x == alpha) x = beta;
    }
    OverlapSet before = legal_overlaps(s);
    OverlapSet after = legal_overlaps(Word(std::move(repl), sigma));
    for (std::int32_t d : before.values()) {
      if (!after.contains(d)) ++failed;
    }
  }

  // an optimal cover cannot match more than m * freq_max positions
  for (int t = 0; t < 200; ++t) {
    std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 8);
    std::int32_t sigma = 2 + static_cast<std::int32_t>(rng() % 2);
    Word w = random_word(rng, n, sigma);
    std::int32_t m = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(std::min(4, n - 1)));
    CoverSolution sol = brute_force_oracle(w, m, HammingMetric{});
    FreqTable freq = make_freq_table(w);
    if (sol.matched > static_cast<std::int64_t>(m) * freq.max_count) ++failed;
  }

  // the unary tile is valid on the dense tiling at every length
  for (int t = 0; t < 20; ++t) {
    std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 29);
    std::int32_t sigma = 2 + static_cast<std::int32_t>(rng() % 3);
    Word w = random_word(rng, n, sigma);
    Symbol alpha = make_freq_table(w).most_frequent;
    for (std::int32_t m = 1; m < n; ++m) {
      std::vector<std::int32_t> starts(static_cast<std::size_t>(n - m + 1));
      for (std::int32_t i = 0; i <= n - m; ++i) starts[static_cast<std::size_t>(i)] = i + 1;
      Tiling dense = Tiling::create(n, std::move(starts));
      Word unary(std::vector<Symbol>(static_cast<std::size_t>(m), alpha), sigma);
      if (!is_valid_tiling(unary, dense)) ++failed;
      Word grown = expand(unary, dense);
      for (std::int32_t i = 0; i < n; ++i) {
        if (grown[i] != alpha) ++failed;
      }
    }
  }

  detail = std::to_string(failed) + " violations";
  return failed == 0;
}

// --- criterion 9: determinism across threads and repetitions ---------------

bool criterion_determinism(std::string& detail) {
  auto rng = rng_for(9);
  long failed = 0;
  for (int t = 0; t < 50; ++t) {
    std::int32_t n = 3 + static_cast<std::int32_t>(rng() % 10);
    std::int32_t sigma = 2 + static_cast<std::int32_t>(rng() % 3);
    Word w = random_word(rng, n, sigma);
    std::int32_t m = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(std::min(5, n - 1)));
    HammingMetric hamming;
    std::string one = fpt_acp(w, m, hamming, {}, 1).canonical();
    std::string again = fpt_acp(w, m, hamming, {}, 1).canonical();
    std::string two = fpt_acp(w, m, hamming, {}, 2).canonical();
    std::string four = fpt_acp(w, m, hamming, {}, 4).canonical();
    if (one != again || one != two || one != four) ++failed;
    if (approx_acp(w, m).canonical() != approx_acp(w, m).canonical()) ++failed;
  }
  detail = "50 instances, " + std::to_string(failed) + " mismatched";
  return failed == 0;
}

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"oracle equivalence of the exact solver", criterion_oracle_equiv},
      {"approximation bounds hold", criterion_approx_bounds},
      {"large-tile approximation is exact", criterion_case3_exact},
      {"shortest cover matches naive enumeration", criterion_scp},
      {"pseudometric pipeline matches the direct oracle", criterion_pseudometric},
      {"block codec round-trip, bound and corruption safety", criterion_codec},
      {"block-coded instances agree with the originals", criterion_block_equiv},
      {"overlap, frequency and dense-tiling lemmas", criterion_lemmas},
      {"deterministic reports across threads and reruns", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] criterion %zu: %s — %s (%lld ms)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, detail.c_str(), static_cast<long long>(ms));
    if (!ok) ++failures;
  }
  return failures;
}
