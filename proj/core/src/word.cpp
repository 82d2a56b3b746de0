#include "quasicover/word.hpp"

#include <algorithm>
#include <array>

namespace quasicover {

Word::Word(std::vector<Symbol> symbols, Symbol sigma) : syms_(std::move(symbols)), sigma_(sigma) {
  if (syms_.empty()) throw InputError("a word must not be empty");
  if (sigma_ < 1) throw InputError("alphabet size must be at least 1");
  for (std::size_t i = 0; i < syms_.size(); ++i) {
    if (syms_[i] < 0 || syms_[i] >= sigma_) {
      throw InputError("symbol out of range at position " + std::to_string(i + 1));
    }
  }
}

Word Word::slice1(std::int32_t lo, std::int32_t hi) const {
  if (lo < 1 || hi > size() || lo > hi) throw InputError("bad slice bounds");
  return Word(std::vector<Symbol>(syms_.begin() + (lo - 1), syms_.begin() + hi), sigma_);
}

Word word_from_text(std::string_view text) {
  std::array<bool, 256> seen{};
  for (unsigned char c : text) seen[c] = true;
  std::array<Symbol, 256> rank{};
  Symbol sigma = 0;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) rank[c] = sigma++;
  }
  if (sigma == 0) throw InputError("a word must not be empty");
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (unsigned char c : text) syms.push_back(rank[c]);
  return Word(std::move(syms), sigma);
}

Word word_from_text(std::string_view text, std::string_view alphabet) {
  std::array<Symbol, 256> rank;
  rank.fill(-1);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(alphabet[i]);
    if (rank[c] != -1) throw InputError("alphabet lists a byte twice");
    rank[c] = static_cast<Symbol>(i);
  }
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (unsigned char c : text) {
    if (rank[c] == -1) throw InputError(std::string("byte '") + static_cast<char>(c) + "' not in the alphabet");
    syms.push_back(rank[c]);
  }
  return Word(std::move(syms), static_cast<Symbol>(alphabet.size()));
}

std::string word_to_text(const Word& w, std::string_view alphabet) {
  if (w.sigma() > static_cast<Symbol>(alphabet.size())) throw InputError("alphabet too small to render the word");
  std::string out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (Symbol s : w.symbols()) out.push_back(alphabet[static_cast<std::size_t>(s)]);
  return out;
}

FreqTable make_freq_table(const Word& w) {
  FreqTable t;
  t.counts.assign(static_cast<std::size_t>(w.sigma()), 0);
  for (Symbol s : w.symbols()) ++t.counts[static_cast<std::size_t>(s)];
  t.max_count = 0;
  t.most_frequent = 0;
  for (Symbol s = 0; s < w.sigma(); ++s) {
    if (t.counts[static_cast<std::size_t>(s)] > t.max_count) {
      t.max_count = t.counts[static_cast<std::size_t>(s)];
      t.most_frequent = s;
    }
  }
  return t;
}

}  // namespace quasicover
