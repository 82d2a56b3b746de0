#pragma once

#include "quasicover/metrics.hpp"
#include "quasicover/solution.hpp"
#include "quasicover/solvers.hpp"

namespace quasicover {

// Collapse of a pseudometric's zero-distance classes onto representative
// symbols. Representatives are the smallest symbol id of each class; the
// quotient table is a genuine metric (distinct classes have positive
// distance).
struct QuotientMap {
  std::vector<Symbol> class_of;        // original symbol -> class id
  std::vector<Symbol> representative;  // class id -> smallest original symbol
  PseudometricTable quotient;          // distances between class ids

  std::int32_t class_count() const { return static_cast<std::int32_t>(representative.size()); }
};

// Builds the zero-distance classes of a valid table. Zero distance is
// transitive here (it follows from the triangle inequality); that is
// re-checked and a violation raises InternalError.
QuotientMap compute_quotient(const PseudometricTable& table);

// Rewrites w over the class alphabet.
Word factorize_word(const Word& w, const QuotientMap& q);

// Maps a solution over the class alphabet back to original symbols
// (each class becomes its representative); the distance is unchanged.
CoverSolution lift_solution(const CoverSolution& s, const QuotientMap& q);

// Fixed-length solver under a pseudometric: validate, quotient, solve over
// the classes, lift back. The achieved distance equals the distance of the
// lifted solution under the original table.
CoverSolution acp_pseudometric(const Word& w, std::int32_t m,
                               const PseudometricTable& table,
                               const SolverLimits& limits = {},
                               unsigned threads = 1);

}  // namespace quasicover
