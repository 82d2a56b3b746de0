#pragma once

#include "quasicover/metrics.hpp"
#include "quasicover/solution.hpp"
#include "quasicover/solvers.hpp"

namespace quasicover {

// Reference solver: enumerates every tiling with norm m and every tile valid
// for it, under any word metric. Intended for small instances; the product
// of tiling count and candidate count is checked against the budget first.
// Ties are broken exactly as in fpt_acp.
CoverSolution brute_force_oracle(const Word& w, std::int32_t m,
                                 const WordMetric& metric,
                                 const SolverLimits& limits = {});

// Minimizes over every tile length 1..|w|-1; among equal distances prefers
// the shortest tile, then the usual order.
CoverSolution brute_force_general(const Word& w, const WordMetric& metric,
                                  const SolverLimits& limits = {});

}  // namespace quasicover
