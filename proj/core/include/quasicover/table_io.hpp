#pragma once

#include <iosfwd>
#include <string>

#include "quasicover/metrics.hpp"

namespace quasicover {

// JSON document format for pseudometric tables:
//   {"alphabet": ["q", "y", "n"], "d": [[0, 1, 1], [1, 0, 0], [1, 0, 0]]}
// Entries are integers or exact "p/q" strings. The table is shape-checked
// here and axiom-checked by validate_pseudometric.
PseudometricTable load_pseudometric_json(std::istream& in);
PseudometricTable load_pseudometric_file(const std::string& path);

std::string pseudometric_to_json(const PseudometricTable& t);

}  // namespace quasicover
