#include "quasicover/suites.hpp"

#include <random>
#include <vector>

#include "quasicover/blockcode.hpp"
#include "quasicover/oracle.hpp"
#include "quasicover/solvers.hpp"
#include "quasicover/word.hpp"

namespace quasicover::suites {

namespace {

void emit(const CaseSink& sink, SuiteSummary& sum, std::string id, bool pass,
          std::string detail = {}) {
  ++sum.total;
  if (!pass) ++sum.failed;
  if (sink) sink(CaseResult{std::move(id), pass, std::move(detail)});
}

Word random_word(std::mt19937_64& rng, std::int32_t n, Symbol sigma) {
  std::vector<Symbol> syms(static_cast<std::size_t>(n));
  for (auto& s : syms) s = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma));
  return Word(std::move(syms), sigma);
}

std::string word_digits(const Word& w) {
  std::string s;
  for (std::int32_t i = 0; i < w.size(); ++i) s += static_cast<char>('0' + w[i]);
  return s;
}

}  // namespace

SuiteSummary run_oracle_equiv(const CaseSink& sink) {
  SuiteSummary sum{.name = "oracle-equiv"};
  HammingMetric hamming;

  // Every binary word of length 4..10 with every tile length in 2..4.
  for (std::int32_t n = 4; n <= 10; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<Symbol> syms(static_cast<std::size_t>(n));
      for (std::int32_t i = 0; i < n; ++i) syms[static_cast<std::size_t>(i)] = (bits >> i) & 1;
      Word w(std::move(syms), 2);
      for (std::int32_t m = 2; m <= 4 && m < n; ++m) {
        CoverSolution fast = fpt_acp(w, m, hamming);
        CoverSolution slow = brute_force_oracle(w, m, hamming);
        bool pass = fast.distance == slow.distance;
        emit(sink, sum, "x/" + word_digits(w) + "/m" + std::to_string(m), pass,
             pass ? std::string()
                  : "fpt " + fast.distance.str() + " oracle " + slow.distance.str());
      }
    }
  }

  // Randomized ternary instances.
  std::mt19937_64 rng(0x5eedbull);
  for (int t = 0; t < 500; ++t) {
    std::int32_t n = 3 + static_cast<std::int32_t>(rng() % 7);  // 3..9
    Word w = random_word(rng, n, 3);
    std::int32_t m = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n - 1));
    CoverSolution fast = fpt_acp(w, m, hamming);
    CoverSolution slow = brute_force_oracle(w, m, hamming);
    bool pass = fast.distance == slow.distance;
    emit(sink, sum, "r/" + std::to_string(t), pass,
         pass ? std::string()
              : word_digits(w) + " m=" + std::to_string(m) + " fpt " + fast.distance.str() +
                    " oracle " + slow.distance.str());
  }
  return sum;
}

SuiteSummary run_approx_ratio(const CaseSink& sink) {
  SuiteSummary sum{.name = "approx-ratio"};
  HammingMetric hamming;
  std::mt19937_64 rng(0xbadc0deull);
  Rational worst(1);
  int case3 = 0;

  for (int t = 0; t < 1000; ++t) {
    std::int32_t n = 3 + static_cast<std::int32_t>(rng() % 10);  // 3..12
    Symbol sigma = 2 + static_cast<Symbol>(rng() % 3);           // 2..4
    Word w = random_word(rng, n, sigma);
    std::int32_t m = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n - 1));

    CoverSolution opt = brute_force_oracle(w, m, hamming);
    CoverSolution cand = approx_acp(w, m);
    FreqTable freq = make_freq_table(w);

    std::int32_t root = 1;
    while (root * root < n) ++root;
    Rational inv_eta = efficiency(w, opt, cand);  // 1/eta: optimum over candidate
    if (worst < inv_eta) worst = inv_eta;

    bool pass = cand.matched >= freq.max_count && inv_eta <= Rational(m) &&
                inv_eta <= Rational(n, freq.max_count) && inv_eta <= Rational(3 * root + 3);
    emit(sink, sum, "bounds/" + std::to_string(t), pass,
         pass ? std::string()
              : word_digits(w) + " m=" + std::to_string(m) + " matched " +
                    std::to_string(cand.matched) + " 1/eta " + inv_eta.str());

    if (m > n / 3) {
      ++case3;
      bool exact = cand.distance == opt.distance;
      emit(sink, sum, "case3/" + std::to_string(t), exact,
           exact ? std::string()
                 : word_digits(w) + " m=" + std::to_string(m) + " approx " +
                       cand.distance.str() + " oracle " + opt.distance.str());
    }
  }
  sum.note = "worst 1/eta " + worst.str() + ", " + std::to_string(case3) + " large-tile hits";
  return sum;
}

SuiteSummary run_codec(const CaseSink& sink) {
  SuiteSummary sum{.name = "codec"};
  for (std::int32_t p : {5, 7, 10}) {
    BlockCodeParams params(p);
    std::size_t longest = 0;
    for (std::uint64_t x = 0; x <= 100000; ++x) {
      std::vector<Symbol> code = psi_encode(x, params);
      longest = std::max(longest, code.size());

      auto back = psi_decode(code, params);
      bool round = back && *back == x;

      std::size_t digits = tau_encode(x, params.digit_base()).size();
      bool bounded = code.size() <= 2 * digits + 2;

      // No single-symbol corruption may still read back as x. Decoding to a
      // different value or to nothing are both fine.
      bool mutation_safe = true;
      for (std::size_t q = 0; q < code.size() && mutation_safe; ++q) {
        Symbol keep = code[q];
        for (Symbol z = 0; z < p; ++z) {
          if (z == keep) continue;
          code[q] = z;
          auto mutated = psi_decode(code, params);
          if (mutated && *mutated == x) {
            mutation_safe = false;
            break;
          }
        }
        code[q] = keep;
      }

      bool pass = round && bounded && mutation_safe;
      if (!pass || x % 10000 == 0) {
        emit(sink, sum, "p" + std::to_string(p) + "/x" + std::to_string(x), pass,
             pass ? std::string()
                  : std::string(round ? "" : "round-trip broke ") +
                        (bounded ? "" : "length bound broke ") +
                        (mutation_safe ? "" : "corruption preserved the value"));
      } else {
        ++sum.total;  // counted silently to keep the sink light
      }
    }
    sum.note += (sum.note.empty() ? "" : ", ");
    sum.note += "p" + std::to_string(p) + " longest " + std::to_string(longest);
  }
  return sum;
}

}  // namespace quasicover::suites
