#include "quasicover/table_io.hpp"

#include <fstream>

#include "json.hpp"
#include "quasicover/errors.hpp"

namespace quasicover {

namespace {

Rational parse_entry(const nlohmann::json& e) {
  if (e.is_number_integer()) return Rational(e.get<std::int64_t>());
  if (e.is_string()) {
    auto r = Rational::parse(e.get<std::string>());
    if (r) return *r;
  }
  throw InputError("table entries must be integers or \"p/q\" strings");
}

}  // namespace

PseudometricTable load_pseudometric_json(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("table is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j["d"].is_array()) {
    throw InputError("table JSON must be an object with a \"d\" matrix");
  }
  PseudometricTable t;
  if (j.contains("alphabet")) {
    if (!j["alphabet"].is_array()) throw InputError("\"alphabet\" must be an array");
    for (const auto& a : j["alphabet"]) {
      if (!a.is_string()) throw InputError("\"alphabet\" entries must be strings");
      t.labels.push_back(a.get<std::string>());
    }
  }
  for (const auto& row : j["d"]) {
    if (!row.is_array() || row.size() != j["d"].size()) {
      throw InputError("\"d\" must be a square matrix");
    }
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_entry(e));
    t.d.push_back(std::move(r));
  }
  if (t.d.empty()) throw InputError("\"d\" must not be empty");
  if (!t.labels.empty() && t.labels.size() != t.d.size()) {
    throw InputError("\"alphabet\" size must match the matrix");
  }
  return t;
}

PseudometricTable load_pseudometric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file: " + path);
  return load_pseudometric_json(in);
}

std::string pseudometric_to_json(const PseudometricTable& t) {
  nlohmann::json j;
  if (!t.labels.empty()) j["alphabet"] = t.labels;
  auto rows = nlohmann::json::array();
  for (const auto& row : t.d) {
    auto r = nlohmann::json::array();
    for (const auto& e : row) {
      if (e.is_integer()) {
        r.push_back(e.num());
      } else {
        r.push_back(e.str());
      }
    }
    rows.push_back(std::move(r));
  }
  j["d"] = std::move(rows);
  return j.dump();
}

}  // namespace quasicover
