#pragma once

#include <optional>
#include <span>

#include "quasicover/metrics.hpp"
#include "quasicover/solution.hpp"
#include "quasicover/solvers.hpp"

namespace quasicover {

// Alphabet layout of the self-delimiting block code over {0, ..., p-1}:
// digits use {0, ..., p-3}, p-1 separates segments, and p-2 stays unused so
// a single corrupted symbol is easy to produce in tests. p >= 5 is required
// for the length chain to terminate.
struct BlockCodeParams {
  std::int32_t p;

  explicit BlockCodeParams(std::int32_t p_);

  std::int32_t digit_base() const { return p - 2; }
  Symbol separator() const { return p - 1; }
  // Largest segment length expressible as a single leading digit.
  std::int32_t max_leading_length() const { return p - 3; }
};

// Canonical base-b digits of x, most significant first; tau(0) = [0].
std::vector<Symbol> tau_encode(std::uint64_t x, std::int32_t base);

// Inverse of tau_encode. Non-canonical digit strings (empty, or a leading
// zero in a multi-digit string) yield nullopt; digits outside the base are a
// caller error.
std::optional<std::uint64_t> tau_decode(std::span<const Symbol> digits, std::int32_t base);

// Self-delimiting code of x: a chain of tau-segments joined by separators,
// where each segment's value is the length of the next segment and the chain
// opens with a single digit. Appends the code to `out`; `ops`, when given,
// accumulates the number of elementary steps spent.
void psi_encode_append(std::uint64_t x, const BlockCodeParams& params,
                       std::vector<Symbol>& out, std::uint64_t* ops = nullptr);

std::vector<Symbol> psi_encode(std::uint64_t x, const BlockCodeParams& params,
                               std::uint64_t* ops = nullptr);

// Accepts exactly the well-chained strings: at least one separator, a single
// leading digit, canonical non-empty segments, and every segment's value
// equal to the length of the next. Returns the final segment's value, or
// nullopt for anything else. Symbols outside {0, ..., p-1} are a caller
// error.
std::optional<std::uint64_t> psi_decode(std::span<const Symbol> code,
                                        const BlockCodeParams& params,
                                        std::uint64_t* ops = nullptr);

// Concatenation of the per-symbol codes of w. The result is a word over the
// code alphabet {0, ..., p-1}.
Word encode_word(const Word& w, const BlockCodeParams& params);

// Splits a concatenation of codes back into values. The code is
// self-delimiting, so the split is deterministic; any flaw yields nullopt.
std::optional<std::vector<std::uint64_t>> decode_word(const Word& w,
                                                      const BlockCodeParams& params,
                                                      std::uint64_t* ops = nullptr);

// True when `block` is the code of some symbol < sigma; returns that symbol.
// Membership is checked by decode followed by re-encode, so look-alike
// chains that the decoder tolerates do not count as images.
std::optional<Symbol> block_preimage(std::span<const Symbol> block, Symbol sigma,
                                     const BlockCodeParams& params);

// Result of the dual-solve consistency check between an instance over the
// original alphabet and its block-coded form.
struct BlockCheckReport {
  CoverSolution original;       // oracle optimum over the original alphabet
  CoverSolution block;          // oracle optimum over the block alphabet
  std::vector<Symbol> block_tile_symbols;  // block solution tile, spelled in code symbols
  bool distances_equal = false;
  bool solution_decodes = false;   // block tile decodes to the original tile
  bool tilings_equal = false;
  std::int32_t mutants_in_play = 0;   // corrupted blocks offered to the solver
  bool mutants_all_infinite = false;  // each scored infinity against every image block
  bool passed = false;
};

// Encodes w block-wise, rebuilds the instance over the block alphabet under
// the induced extended metric (image blocks keep the original symbol
// distances, corrupted blocks sit at infinity), solves both instances by the
// oracle and checks they agree. `fixed_width` additionally requires all
// symbol codes to share one width and rejects the instance otherwise; the
// check itself always works block-aligned, which is sound because any tile
// leaving the image scores infinity.
BlockCheckReport block_acp_check(const Word& w, std::int32_t m,
                                 const AdditiveMetric& metric,
                                 const BlockCodeParams& params,
                                 bool fixed_width = false,
                                 const SolverLimits& limits = {});

}  // namespace quasicover
