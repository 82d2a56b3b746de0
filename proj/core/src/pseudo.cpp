#include "quasicover/pseudo.hpp"

#include <utility>

#include "quasicover/tiling.hpp"

namespace quasicover {

QuotientMap compute_quotient(const PseudometricTable& table) {
  auto violations = validate_pseudometric(table);
  if (!violations.empty()) {
    throw InputError("invalid pseudometric table: " + violations.front().describe());
  }
  std::int32_t sigma = table.size();

  // Zero distance is an equivalence here: the triangle inequality chains
  // zeros through any midpoint. Classes are numbered by smallest member.
  QuotientMap q;
  q.class_of.assign(static_cast<std::size_t>(sigma), -1);
  for (Symbol a = 0; a < sigma; ++a) {
    if (q.class_of[static_cast<std::size_t>(a)] != -1) continue;
    Symbol id = static_cast<Symbol>(q.representative.size());
    q.class_of[static_cast<std::size_t>(a)] = id;
    q.representative.push_back(a);
    for (Symbol b = a + 1; b < sigma; ++b) {
      if (table.at(a, b).is_zero()) {
        if (q.class_of[static_cast<std::size_t>(b)] != -1) {
          throw InternalError("zero-distance relation failed to be transitive");
        }
        q.class_of[static_cast<std::size_t>(b)] = id;
      }
    }
  }
  for (Symbol a = 0; a < sigma; ++a) {
    for (Symbol b = 0; b < sigma; ++b) {
      bool same = q.class_of[static_cast<std::size_t>(a)] == q.class_of[static_cast<std::size_t>(b)];
      if (same != table.at(a, b).is_zero()) {
        throw InternalError("zero-distance relation failed to be transitive");
      }
    }
  }

  std::int32_t k = q.class_count();
  q.quotient.labels.resize(static_cast<std::size_t>(k));
  q.quotient.d.assign(static_cast<std::size_t>(k),
                      std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
  for (std::int32_t i = 0; i < k; ++i) {
    Symbol ri = q.representative[static_cast<std::size_t>(i)];
    q.quotient.labels[static_cast<std::size_t>(i)] =
        table.labels.empty() ? std::string() : table.labels[static_cast<std::size_t>(ri)];
    for (std::int32_t j = 0; j < k; ++j) {
      q.quotient.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          table.at(ri, q.representative[static_cast<std::size_t>(j)]);
    }
  }
  return q;
}

Word factorize_word(const Word& w, const QuotientMap& q) {
  if (w.sigma() != static_cast<std::int32_t>(q.class_of.size())) {
    throw InputError("word alphabet does not match the quotient map");
  }
  std::vector<Symbol> syms(static_cast<std::size_t>(w.size()));
  for (std::int32_t i = 0; i < w.size(); ++i) {
    syms[static_cast<std::size_t>(i)] = q.class_of[static_cast<std::size_t>(w[i])];
  }
  return Word(std::move(syms), q.class_count());
}

Word lift_solution(const Word& s, const QuotientMap& q) {
  if (s.sigma() != q.class_count()) {
    throw InputError("tile alphabet does not match the quotient map");
  }
  std::vector<Symbol> syms(static_cast<std::size_t>(s.size()));
  for (std::int32_t i = 0; i < s.size(); ++i) {
    syms[static_cast<std::size_t>(i)] = q.representative[static_cast<std::size_t>(s[i])];
  }
  return Word(std::move(syms), static_cast<std::int32_t>(q.class_of.size()));
}

CoverSolution acp_pseudometric(const Word& w, std::int32_t m, const PseudometricTable& table,
                               const SolverLimits& limits, unsigned threads) {
  QuotientMap q = compute_quotient(table);
  Word wq = factorize_word(w, q);
  TableMetric quotient_metric(q.quotient);
  CoverSolution sol = fpt_acp(wq, m, quotient_metric, limits, threads);

  // Lifting through representatives keeps every per-position cost, hence the
  // distance. The matched count is recomputed literally against w.
  Word tile = lift_solution(sol.tile, q);
  Word e = expand(tile, sol.tiling);
  std::int64_t matched = 0;
  for (std::int32_t i = 0; i < w.size(); ++i) {
    if (w[i] == e[i]) ++matched;
  }
  return CoverSolution{std::move(tile), std::move(sol.tiling), sol.distance, matched};
}

}  // namespace quasicover
