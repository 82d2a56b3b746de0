#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quasicover/errors.hpp"

namespace quasicover {

using Symbol = std::int32_t;

// A non-empty word over the integer alphabet {0, ..., sigma-1}.
class Word {
public:
  Word(std::vector<Symbol> symbols, Symbol sigma);

  std::int32_t size() const { return static_cast<std::int32_t>(syms_.size()); }
  Symbol sigma() const { return sigma_; }

  Symbol operator[](std::int32_t i0) const { return syms_[static_cast<std::size_t>(i0)]; }
  // 1-based access, matching the positions used in reports and errors.
  Symbol at1(std::int32_t pos) const { return syms_[static_cast<std::size_t>(pos - 1)]; }

  const std::vector<Symbol>& symbols() const { return syms_; }

  // 1-based inclusive slice; keeps the alphabet.
  Word slice1(std::int32_t lo, std::int32_t hi) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.sigma_ == b.sigma_ && a.syms_ == b.syms_;
  }
  // Lexicographic on symbols; used for tie-breaking.
  friend bool operator<(const Word& a, const Word& b) { return a.syms_ < b.syms_; }

private:
  std::vector<Symbol> syms_;
  Symbol sigma_ = 0;
};

// Builds a word from text, mapping each distinct byte to its rank among the
// distinct bytes present (so 'a' < 'b' keeps symbol order intuitive).
Word word_from_text(std::string_view text);

// Same, but over an explicit alphabet string; bytes outside it are rejected.
Word word_from_text(std::string_view text, std::string_view alphabet);

// Renders symbol ids back through an alphabet string.
std::string word_to_text(const Word& w, std::string_view alphabet);

// Per-symbol occurrence counts of a word.
struct FreqTable {
  std::vector<std::int64_t> counts;
  std::int64_t max_count = 0;
  Symbol most_frequent = 0;  // smallest symbol id among the maxima
};

FreqTable make_freq_table(const Word& w);

}  // namespace quasicover
