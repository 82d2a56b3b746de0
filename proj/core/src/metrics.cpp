#include "quasicover/metrics.hpp"

namespace quasicover {

void WordMetric::check_shapes(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw InputError("distance of words with different lengths");
  if (u.sigma() != v.sigma()) throw InputError("distance of words over different alphabets");
}

ExtCost AdditiveMetric::distance(const Word& u, const Word& v) const {
  return ExtCost(distance_finite(u, v));
}

Rational AdditiveMetric::distance_finite(const Word& u, const Word& v) const {
  check_shapes(u, v);
  Rational acc;
  for (std::int32_t i = 1; i <= u.size(); ++i) acc += position_cost(i, u.at1(i), v.at1(i));
  return acc;
}

Rational AdditiveMetric::segment_cost(const Word& w, std::int32_t lo, std::int32_t hi,
                                      const Word& s, std::int32_t s_lo) const {
  if (lo < 1 || hi > w.size() || lo > hi) throw InputError("segment outside the word");
  if (s_lo < 1 || s_lo + (hi - lo) > s.size()) throw InputError("segment outside the tile");
  Rational acc;
  for (std::int32_t i = 0; i <= hi - lo; ++i) {
    acc += position_cost(lo + i, w.at1(lo + i), s.at1(s_lo + i));
  }
  return acc;
}

Rational ShiftMetric::position_cost(std::int32_t pos, Symbol a, Symbol b) const {
  if (a == b) return Rational(0);
  if (pos > 62) throw InputError("shift metric supports positions up to 62 only");
  return Rational(1, std::int64_t{1} << pos);
}

std::string AxiomViolation::describe() const {
  auto sym = [](Symbol s) { return std::to_string(s); };
  switch (kind) {
    case Kind::Shape:
      return "table is not square";
    case Kind::Negative:
      return "negative distance between " + sym(a) + " and " + sym(b);
    case Kind::Diagonal:
      return "nonzero distance of " + sym(a) + " to itself";
    case Kind::Symmetry:
      return "asymmetric pair " + sym(a) + ", " + sym(b);
    case Kind::Triangle:
      return "triangle violated for " + sym(a) + ", " + sym(b) + ", " + sym(c);
  }
  return "unknown violation";
}

std::vector<AxiomViolation> validate_pseudometric(const PseudometricTable& t) {
  std::vector<AxiomViolation> out;
  std::int32_t k = t.size();
  if (k == 0) {
    out.push_back({AxiomViolation::Kind::Shape});
    return out;
  }
  for (std::int32_t i = 0; i < k; ++i) {
    if (static_cast<std::int32_t>(t.d[static_cast<std::size_t>(i)].size()) != k) {
      out.push_back({AxiomViolation::Kind::Shape});
      return out;
    }
  }
  for (Symbol a = 0; a < k; ++a) {
    if (!t.at(a, a).is_zero()) out.push_back({AxiomViolation::Kind::Diagonal, a});
    for (Symbol b = 0; b < k; ++b) {
      if (t.at(a, b) < Rational(0)) out.push_back({AxiomViolation::Kind::Negative, a, b});
      if (a < b && !(t.at(a, b) == t.at(b, a))) {
        out.push_back({AxiomViolation::Kind::Symmetry, a, b});
      }
    }
  }
  for (Symbol a = 0; a < k; ++a) {
    for (Symbol b = 0; b < k; ++b) {
      for (Symbol c = 0; c < k; ++c) {
        if (t.at(a, c) > t.at(a, b) + t.at(b, c)) {
          out.push_back({AxiomViolation::Kind::Triangle, a, b, c});
        }
      }
    }
  }
  return out;
}

TableMetric::TableMetric(PseudometricTable table) : table_(std::move(table)) {
  auto violations = validate_pseudometric(table_);
  if (!violations.empty()) {
    throw InputError("invalid pseudometric table: " + violations.front().describe());
  }
}

Rational TableMetric::position_cost(std::int32_t, Symbol a, Symbol b) const {
  if (a < 0 || b < 0 || a >= table_.size() || b >= table_.size()) {
    throw InputError("symbol outside the table alphabet");
  }
  return table_.at(a, b);
}

ExtCost SquaredHammingMetric::distance(const Word& u, const Word& v) const {
  check_shapes(u, v);
  std::int64_t h = 0;
  for (std::int32_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) ++h;
  }
  return ExtCost(Rational(h) * Rational(h));
}

const AdditiveMetric& SquaredHammingMetric::additive_lower_bound() const {
  static const HammingMetric hamming;
  return hamming;
}

ExtendedTableMetric::ExtendedTableMetric(std::vector<std::vector<ExtCost>> d) : d_(std::move(d)) {
  for (const auto& row : d_) {
    if (row.size() != d_.size()) throw InputError("extended table is not square");
  }
}

ExtCost ExtendedTableMetric::distance(const Word& u, const Word& v) const {
  check_shapes(u, v);
  ExtCost acc;
  for (std::int32_t i = 0; i < u.size(); ++i) {
    acc += at(u[i], v[i]);
    if (!acc.finite()) return acc;  // infinity absorbs the rest
  }
  return acc;
}

}  // namespace quasicover
