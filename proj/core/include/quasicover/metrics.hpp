#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quasicover/extended.hpp"
#include "quasicover/word.hpp"

namespace quasicover {

// Distance between equal-length words. Implementations must be symmetric,
// zero on equal words, and non-negative; zero between distinct words is
// allowed (pseudometrics), as is infinity (extended metrics).
class WordMetric {
public:
  virtual ~WordMetric() = default;
  virtual ExtCost distance(const Word& u, const Word& v) const = 0;
  virtual std::string name() const = 0;

protected:
  static void check_shapes(const Word& u, const Word& v);
};

// Distance that is a sum of per-position costs c_pos(a, b). Positions are
// 1-based and refer to the host word, so non-homogeneous families (like the
// halving weights below) are well defined on segments.
class AdditiveMetric : public WordMetric {
public:
  virtual Rational position_cost(std::int32_t pos, Symbol a, Symbol b) const = 0;
  virtual bool homogeneous() const = 0;

  ExtCost distance(const Word& u, const Word& v) const final;
  Rational distance_finite(const Word& u, const Word& v) const;

  // Cost of w[lo..hi] (1-based inclusive) against the tile slice starting at
  // s_lo, charged at the absolute positions of w.
  Rational segment_cost(const Word& w, std::int32_t lo, std::int32_t hi,
                        const Word& s, std::int32_t s_lo) const;
};

// Counts mismatching positions.
class HammingMetric final : public AdditiveMetric {
public:
  Rational position_cost(std::int32_t, Symbol a, Symbol b) const override {
    return a == b ? Rational(0) : Rational(1);
  }
  bool homogeneous() const override { return true; }
  std::string name() const override { return "hamming"; }
};

// A mismatch at position i costs 1/2^i, so early mismatches dominate.
// Exactness caps the supported length at 62.
class ShiftMetric final : public AdditiveMetric {
public:
  Rational position_cost(std::int32_t pos, Symbol a, Symbol b) const override;
  bool homogeneous() const override { return false; }
  std::string name() const override { return "shift"; }
};

// A symmetric table of exact pairwise symbol distances with zero diagonal
// satisfying the triangle inequality. Distinct symbols at distance zero are
// allowed.
struct PseudometricTable {
  std::vector<std::string> labels;          // optional display names, may be empty
  std::vector<std::vector<Rational>> d;

  std::int32_t size() const { return static_cast<std::int32_t>(d.size()); }
  const Rational& at(Symbol a, Symbol b) const {
    return d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

struct AxiomViolation {
  enum class Kind { Shape, Negative, Diagonal, Symmetry, Triangle };
  Kind kind;
  Symbol a = -1, b = -1, c = -1;
  std::string describe() const;
};

std::vector<AxiomViolation> validate_pseudometric(const PseudometricTable& t);

// Homogeneous additive metric backed by a validated pseudometric table.
class TableMetric final : public AdditiveMetric {
public:
  explicit TableMetric(PseudometricTable table);

  Rational position_cost(std::int32_t, Symbol a, Symbol b) const override;
  bool homogeneous() const override { return true; }
  std::string name() const override { return "table"; }
  const PseudometricTable& table() const { return table_; }

private:
  PseudometricTable table_;
};

// Distance bounded below by every additive split of the word: for any cut,
// d(u, v) >= d(prefixes) + d(suffixes). Declares the additive family that
// witnesses the bound.
class SuperadditiveMetric : public WordMetric {
public:
  virtual const AdditiveMetric& additive_lower_bound() const = 0;
};

// Square of the Hamming distance; the shipped superadditive instance.
class SquaredHammingMetric final : public SuperadditiveMetric {
public:
  ExtCost distance(const Word& u, const Word& v) const override;
  const AdditiveMetric& additive_lower_bound() const override;
  std::string name() const override { return "squared-hamming"; }
};

// Additive per-position metric given by an explicit cost table that may
// contain infinity; used for instances over derived alphabets.
class ExtendedTableMetric final : public WordMetric {
public:
  explicit ExtendedTableMetric(std::vector<std::vector<ExtCost>> d);

  ExtCost distance(const Word& u, const Word& v) const override;
  ExtCost at(Symbol a, Symbol b) const {
    return d_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  std::string name() const override { return "extended-table"; }

private:
  std::vector<std::vector<ExtCost>> d_;
};

}  // namespace quasicover
