#pragma once

#include <functional>
#include <string>

namespace quasicover::suites {

// One verdict from a validation suite.
struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteSummary {
  std::string name;
  int total = 0;
  int failed = 0;
  std::string note;  // e.g. the extreme observed ratio
  bool ok() const { return failed == 0; }
};

using CaseSink = std::function<void(const CaseResult&)>;

// Exact solver versus the enumeration oracle: exhaustive over a binary
// alphabet plus randomized ternary instances. Distances must match exactly.
SuiteSummary run_oracle_equiv(const CaseSink& sink);

// Approximation quality: the candidate must keep every guaranteed bound on
// the matched-position ratio, and must be exactly optimal for large tiles.
SuiteSummary run_approx_ratio(const CaseSink& sink);

// Block code round-trips, image injectivity, the length bound and
// single-symbol corruption detection.
SuiteSummary run_codec(const CaseSink& sink);

}  // namespace quasicover::suites
