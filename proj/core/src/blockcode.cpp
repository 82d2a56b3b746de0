#include "quasicover/blockcode.hpp"

#include <algorithm>

#include "quasicover/induced.hpp"
#include "quasicover/oracle.hpp"
#include "quasicover/tiling.hpp"

namespace quasicover {

BlockCodeParams::BlockCodeParams(std::int32_t p_) : p(p_) {
  if (p < 5) throw InputError("block code needs an alphabet of at least 5 symbols");
}

std::vector<Symbol> tau_encode(std::uint64_t x, std::int32_t base) {
  if (base < 2) throw InputError("digit base must be at least 2");
  std::vector<Symbol> digits;
  do {
    digits.push_back(static_cast<Symbol>(x % static_cast<std::uint64_t>(base)));
    x /= static_cast<std::uint64_t>(base);
  } while (x > 0);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<std::uint64_t> tau_decode(std::span<const Symbol> digits, std::int32_t base) {
  if (base < 2) throw InputError("digit base must be at least 2");
  if (digits.empty()) return std::nullopt;
  if (digits.size() > 1 && digits.front() == 0) return std::nullopt;
  std::uint64_t v = 0;
  for (Symbol d : digits) {
    if (d < 0 || d >= base) throw InputError("digit outside the base");
    v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
  }
  return v;
}

void psi_encode_append(std::uint64_t x, const BlockCodeParams& params,
                       std::vector<Symbol>& out, std::uint64_t* ops) {
  std::vector<Symbol> t = tau_encode(x, params.digit_base());
  std::uint64_t len = t.size();
  if (len <= static_cast<std::uint64_t>(params.max_leading_length())) {
    out.push_back(static_cast<Symbol>(len));
    if (ops) ++*ops;
  } else {
    psi_encode_append(len, params, out, ops);
  }
  out.push_back(params.separator());
  out.insert(out.end(), t.begin(), t.end());
  if (ops) *ops += 1 + len;
}

std::vector<Symbol> psi_encode(std::uint64_t x, const BlockCodeParams& params,
                               std::uint64_t* ops) {
  std::vector<Symbol> out;
  psi_encode_append(x, params, out, ops);
  return out;
}

std::optional<std::uint64_t> psi_decode(std::span<const Symbol> code,
                                        const BlockCodeParams& params,
                                        std::uint64_t* ops) {
  if (ops) *ops += code.size();
  for (Symbol c : code) {
    if (c < 0 || c >= params.p) throw InputError("symbol outside the code alphabet");
    if (c == params.p - 2) return std::nullopt;  // never emitted by the encoder
  }
  Symbol sep = params.separator();
  // Split on separators; segments must all be non-empty.
  std::vector<std::span<const Symbol>> seg;
  std::size_t from = 0;
  for (std::size_t i = 0; i <= code.size(); ++i) {
    if (i == code.size() || code[i] == sep) {
      if (i == from) return std::nullopt;
      seg.push_back(code.subspan(from, i - from));
      from = i + 1;
    }
  }
  if (seg.size() < 2) return std::nullopt;       // at least one separator
  if (seg.front().size() != 1) return std::nullopt;  // single leading digit
  for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
    auto v = tau_decode(seg[i], params.digit_base());
    if (!v) return std::nullopt;
    if (*v != seg[i + 1].size()) return std::nullopt;  // broken length chain
  }
  return tau_decode(seg.back(), params.digit_base());
}

Word encode_word(const Word& w, const BlockCodeParams& params) {
  std::vector<Symbol> out;
  for (std::int32_t i = 0; i < w.size(); ++i) {
    psi_encode_append(static_cast<std::uint64_t>(w[i]), params, out);
  }
  return Word(std::move(out), params.p);
}

std::optional<std::vector<std::uint64_t>> decode_word(const Word& w,
                                                      const BlockCodeParams& params,
                                                      std::uint64_t* ops) {
  if (w.sigma() > params.p) throw InputError("word alphabet exceeds the code alphabet");
  Symbol sep = params.separator();
  std::int32_t base = params.digit_base();
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  const auto n = static_cast<std::size_t>(w.size());
  auto read_segment = [&](std::uint64_t len) -> std::optional<std::uint64_t> {
    if (i + len > n) return std::nullopt;
    std::span<const Symbol> s(w.symbols().data() + i, static_cast<std::size_t>(len));
    for (Symbol c : s) {
      if (c >= base) return std::nullopt;
    }
    i += static_cast<std::size_t>(len);
    if (ops) *ops += len;
    return tau_decode(s, base);
  };
  while (i < n) {
    // A block opens with one digit; the code is self-delimiting from there.
    Symbol lead = w.symbols()[i];
    if (lead < 1 || lead > params.max_leading_length()) return std::nullopt;
    ++i;
    if (ops) ++*ops;
    std::uint64_t want = static_cast<std::uint64_t>(lead);
    for (;;) {
      if (i >= n || w.symbols()[i] != sep) return std::nullopt;
      ++i;
      if (ops) ++*ops;
      auto v = read_segment(want);
      if (!v) return std::nullopt;
      if (i < n && w.symbols()[i] == sep) {
        if (*v < 1) return std::nullopt;  // a continued chain needs a length
        want = *v;
        continue;
      }
      values.push_back(*v);
      break;
    }
  }
  return values;
}

std::optional<Symbol> block_preimage(std::span<const Symbol> block, Symbol sigma,
                                     const BlockCodeParams& params) {
  auto v = psi_decode(block, params);
  if (!v || *v >= static_cast<std::uint64_t>(sigma)) return std::nullopt;
  // The decoder also accepts padded chains that the encoder never emits;
  // image membership is re-encode equality.
  std::vector<Symbol> canon = psi_encode(*v, params);
  if (canon.size() != block.size() || !std::equal(canon.begin(), canon.end(), block.begin())) {
    return std::nullopt;
  }
  return static_cast<Symbol>(*v);
}

BlockCheckReport block_acp_check(const Word& w, std::int32_t m,
                                 const AdditiveMetric& metric,
                                 const BlockCodeParams& params,
                                 bool fixed_width, const SolverLimits& limits) {
  if (!metric.homogeneous()) {
    throw InputError("block comparison needs a position-independent metric");
  }
  Symbol sigma = w.sigma();
  if (sigma > params.p) throw InputError("alphabet does not fit the code");

  std::vector<std::vector<Symbol>> blocks;
  for (Symbol a = 0; a < sigma; ++a) {
    blocks.push_back(psi_encode(static_cast<std::uint64_t>(a), params));
  }
  if (fixed_width) {
    for (const auto& b : blocks) {
      if (b.size() != blocks.front().size()) {
        throw InputError("codes are not fixed-width for this alphabet");
      }
    }
  }

  // The block alphabet: each image block keeps its symbol id, and each image
  // block contributes one corrupted variant that left the image, so the
  // solver must price it at infinity.
  std::vector<std::optional<Symbol>> preimage;
  for (Symbol a = 0; a < sigma; ++a) preimage.emplace_back(a);
  std::vector<std::vector<Symbol>> mutants;
  for (Symbol a = 0; a < sigma; ++a) {
    bool found = false;
    for (std::size_t q = 0; q < blocks[static_cast<std::size_t>(a)].size() && !found; ++q) {
      for (Symbol z = 0; z < params.p && !found; ++z) {
        if (z == blocks[static_cast<std::size_t>(a)][q]) continue;
        std::vector<Symbol> mut = blocks[static_cast<std::size_t>(a)];
        mut[q] = z;
        if (!block_preimage(mut, sigma, params)) {
          mutants.push_back(std::move(mut));
          preimage.emplace_back(std::nullopt);
          found = true;
        }
      }
    }
  }

  auto induced = induced_extended_metric(preimage, [&](Symbol a, Symbol b) {
    return metric.position_cost(1, a, b);
  });
  ExtendedTableMetric block_metric(induced);

  // Same symbol stream, wider alphabet: position i of the block word stands
  // for the i-th block of the coded text.
  Word wb(std::vector<Symbol>(w.symbols()), static_cast<Symbol>(preimage.size()));

  BlockCheckReport rep{brute_force_oracle(w, m, metric, limits),
                       brute_force_oracle(wb, m, block_metric, limits)};

  for (std::int32_t j = 0; j < rep.block.tile.size(); ++j) {
    Symbol id = rep.block.tile[j];
    const auto& b = id < sigma ? blocks[static_cast<std::size_t>(id)]
                               : mutants[static_cast<std::size_t>(id - sigma)];
    rep.block_tile_symbols.insert(rep.block_tile_symbols.end(), b.begin(), b.end());
  }

  rep.distances_equal = rep.original.distance == rep.block.distance;
  rep.solution_decodes = rep.block.tile.size() == rep.original.tile.size();
  for (std::int32_t j = 0; rep.solution_decodes && j < rep.block.tile.size(); ++j) {
    if (rep.block.tile[j] >= sigma || rep.block.tile[j] != rep.original.tile[j]) {
      rep.solution_decodes = false;
    }
  }
  rep.tilings_equal = rep.original.tiling == rep.block.tiling;
  rep.mutants_in_play = static_cast<std::int32_t>(mutants.size());
  rep.mutants_all_infinite = true;
  for (std::size_t y = static_cast<std::size_t>(sigma); y < preimage.size(); ++y) {
    for (Symbol a = 0; a < sigma; ++a) {
      if (induced[y][static_cast<std::size_t>(a)].finite() ||
          induced[static_cast<std::size_t>(a)][y].finite()) {
        rep.mutants_all_infinite = false;
      }
    }
  }
  rep.passed = rep.distances_equal && rep.solution_decodes && rep.tilings_equal &&
               rep.mutants_all_infinite;
  return rep;
}

}  // namespace quasicover
