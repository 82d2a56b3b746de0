#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quasicover/quasicover.hpp"

namespace qc = quasicover;
using nlohmann::json;

namespace {

qc::SolverLimits limits_from_env() {
  qc::SolverLimits lim;
  if (const char* v = std::getenv("QUASICOVER_BUDGET")) {
    std::uint64_t cap = 0;
    auto [p, ec] = std::from_chars(v, v + std::string_view(v).size(), cap);
    if (ec != std::errc() || *p != '\0' || cap == 0) {
      throw qc::InputError("QUASICOVER_BUDGET must be a positive integer");
    }
    lim.max_transitions = cap;
  }
  return lim;
}

// A word plus the way to spell its symbols back out.
struct WordInput {
  qc::Word word;
  std::string alphabet;  // empty: render symbols numerically
};

std::string distinct_sorted(const std::string& text) {
  std::set<char> seen(text.begin(), text.end());
  return std::string(seen.begin(), seen.end());
}

WordInput make_word(const std::string& text, const std::vector<std::int64_t>& symbols,
                    std::int64_t sigma) {
  if (!text.empty() && !symbols.empty()) {
    throw qc::InputError("give the word as text or as --symbols, not both");
  }
  if (!text.empty()) {
    return WordInput{qc::word_from_text(text), distinct_sorted(text)};
  }
  if (symbols.empty()) throw qc::InputError("no input word given");
  std::vector<qc::Symbol> syms;
  std::int64_t top = 0;
  for (std::int64_t s : symbols) {
    if (s < 0 || s > 1'000'000) throw qc::InputError("symbol ids must be small non-negatives");
    top = std::max(top, s);
    syms.push_back(static_cast<qc::Symbol>(s));
  }
  std::int64_t sig = sigma > 0 ? sigma : top + 1;
  return WordInput{qc::Word(std::move(syms), static_cast<qc::Symbol>(sig)), std::string()};
}

// Words addressed against a metric table go through its labels when they are
// single characters; otherwise only --symbols works.
WordInput make_word_for_table(const std::string& text, const std::vector<std::int64_t>& symbols,
                              const qc::PseudometricTable& table) {
  if (!text.empty()) {
    std::string alphabet;
    for (const auto& l : table.labels) {
      if (l.size() != 1) {
        throw qc::InputError("table labels are not single characters; use --symbols");
      }
      alphabet += l;
    }
    if (alphabet.empty()) throw qc::InputError("table has no labels; use --symbols");
    return WordInput{qc::word_from_text(text, alphabet), alphabet};
  }
  WordInput in = make_word(text, symbols, table.size());
  if (in.word.sigma() != table.size()) {
    throw qc::InputError("word alphabet does not match the table");
  }
  return in;
}

std::string render_word(const qc::Word& w, const std::string& alphabet) {
  if (!alphabet.empty()) return qc::word_to_text(w, alphabet);
  std::string out;
  for (std::int32_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string render_starts(const std::vector<std::int32_t>& starts) {
  std::string out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(starts[i]);
  }
  return out;
}

json solution_json(const qc::CoverSolution& s, const std::string& alphabet) {
  json j;
  j["tile"] = render_word(s.tile, alphabet);
  j["tile_symbols"] = s.tile.symbols();
  j["tiling"] = s.tiling.starts;
  j["distance"] = s.distance.str();
  j["matched"] = s.matched;
  return j;
}

void print_solution(const qc::CoverSolution& s, const std::string& alphabet,
                    const std::string& prefix = {}) {
  std::cout << prefix << "tile: " << render_word(s.tile, alphabet) << "\n"
            << prefix << "tiling: " << render_starts(s.tiling.starts) << "\n"
            << prefix << "distance: " << s.distance.str() << "\n"
            << prefix << "matched: " << s.matched << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point from = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - from)
        .count();
  }
};

int run_bench(const std::string& suite) {
  auto sink = [](const qc::suites::CaseResult& c) {
    json j;
    j["id"] = c.id;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    std::cout << j.dump() << "\n";
  };
  qc::suites::SuiteSummary sum;
  if (suite == "oracle-equiv") {
    sum = qc::suites::run_oracle_equiv(sink);
  } else if (suite == "approx-ratio") {
    sum = qc::suites::run_approx_ratio(sink);
  } else if (suite == "codec") {
    sum = qc::suites::run_codec(sink);
  } else {
    throw qc::InputError("unknown suite: " + suite);
  }
  json j;
  j["suite"] = sum.name;
  j["total"] = sum.total;
  j["failed"] = sum.failed;
  if (!sum.note.empty()) j["note"] = sum.note;
  std::cout << j.dump() << "\n";
  return sum.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string covers: exact and approximate quasi-periodicity solvers"};
  app.require_subcommand(1);

  std::string text;
  std::vector<std::int64_t> symbols;
  std::int64_t sigma = 0;
  bool as_json = false;
  bool timing = false;

  auto add_word_opts = [&](CLI::App* cmd) {
    cmd->add_option("word", text, "input word as text, one byte per symbol");
    cmd->add_option("--symbols", symbols, "input word as comma-separated symbol ids")
        ->delimiter(',');
    cmd->add_option("--sigma", sigma, "alphabet size when --symbols is used");
    cmd->add_flag("--json", as_json, "machine-readable output");
    cmd->add_flag("--timing", timing, "include wall-clock time (breaks byte-identical output)");
  };

  auto* scp = app.add_subcommand("scp", "shortest cover of a word");
  add_word_opts(scp);

  auto* acp = app.add_subcommand("acp", "best cover of a fixed length");
  add_word_opts(acp);
  std::int32_t m = 0;
  std::string metric_name = "hamming";
  std::string table_file;
  std::string solver = "fpt";
  std::string tolerance_str;
  std::int32_t restarts = 32;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool with_oracle = false;
  acp->add_option("--m", m, "tile length")->required();
  acp->add_option("--metric", metric_name, "hamming, shift, or table")
      ->check(CLI::IsMember({"hamming", "shift", "table"}));
  acp->add_option("--table", table_file, "pseudometric table JSON (with --metric table)");
  acp->add_option("--solver", solver, "oracle, fpt, approx, or super")
      ->check(CLI::IsMember({"oracle", "fpt", "approx", "super"}));
  acp->add_option("--tolerance", tolerance_str, "distance bound for --solver super");
  acp->add_option("--restarts", restarts, "random restarts for --solver super");
  acp->add_option("--seed", seed, "seed for --solver super");
  acp->add_option("--threads", threads, "worker threads for --solver fpt");
  acp->add_flag("--with-oracle", with_oracle, "also run the exhaustive oracle and report efficiency");

  auto* quotient = app.add_subcommand("quotient", "solve over a pseudometric via its quotient");
  add_word_opts(quotient);
  std::string q_table_file;
  std::int32_t q_m = 0;
  quotient->add_option("--table", q_table_file, "pseudometric table JSON")->required();
  quotient->add_option("--m", q_m, "tile length")->required();

  auto* encode = app.add_subcommand("encode", "block-encode integers from stdin, one per line");
  auto* decode = app.add_subcommand("decode", "decode comma-separated code lines from stdin");
  std::int32_t p = 0;
  encode->add_option("--p", p, "code alphabet size (>= 5)")->required();
  decode->add_option("--p", p, "code alphabet size (>= 5)")->required();
  encode->add_flag("--json", as_json, "machine-readable output");
  decode->add_flag("--json", as_json, "machine-readable output");

  auto* bench = app.add_subcommand("bench", "run a validation suite, one JSON line per case");
  std::string suite;
  bench->add_option("--suite", suite, "oracle-equiv, approx-ratio, or codec")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    qc::SolverLimits limits = limits_from_env();

    if (scp->parsed()) {
      WordInput in = make_word(text, symbols, sigma);
      Timer timer;
      qc::Word tile = qc::shortest_cover(in.word);
      auto cover = qc::is_cover(tile, in.word);
      if (!cover) throw qc::InternalError("shortest cover failed to cover");
      bool proper = tile.size() < in.word.size();
      if (as_json) {
        json j;
        j["command"] = "scp";
        j["word"] = render_word(in.word, in.alphabet);
        j["tile"] = render_word(tile, in.alphabet);
        j["tile_symbols"] = tile.symbols();
        j["length"] = tile.size();
        j["proper"] = proper;
        j["tiling"] = cover->starts;
        if (timing) j["elapsed_ms"] = timer.ms();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "tile: " << render_word(tile, in.alphabet) << "\n"
                  << "length: " << tile.size() << "\n"
                  << "proper: " << (proper ? "true" : "false") << "\n"
                  << "tiling: " << render_starts(cover->starts) << "\n";
        if (timing) std::cout << "elapsed_ms: " << timer.ms() << "\n";
      }
      return 0;
    }

    if (acp->parsed()) {
      std::unique_ptr<qc::AdditiveMetric> metric;
      WordInput in = make_word(text, symbols, sigma);
      if (metric_name == "hamming") {
        metric = std::make_unique<qc::HammingMetric>();
      } else if (metric_name == "shift") {
        metric = std::make_unique<qc::ShiftMetric>();
      } else {
        if (table_file.empty()) throw qc::InputError("--metric table needs --table FILE");
        qc::PseudometricTable t = qc::load_pseudometric_file(table_file);
        in = make_word_for_table(text, symbols, t);
        metric = std::make_unique<qc::TableMetric>(t);
      }

      json j;
      j["command"] = "acp";
      j["word"] = render_word(in.word, in.alphabet);
      j["m"] = m;
      j["metric"] = metric_name;
      j["solver"] = solver;
      j["budget"] = {{"max_transitions", limits.max_transitions}};

      Timer timer;
      std::optional<qc::CoverSolution> sol;
      if (solver == "fpt") {
        sol = qc::fpt_acp(in.word, m, *metric, limits, threads);
      } else if (solver == "oracle") {
        sol = qc::brute_force_oracle(in.word, m, *metric, limits);
      } else if (solver == "approx") {
        if (metric_name != "hamming") {
          throw qc::InputError("--solver approx works with the hamming metric only");
        }
        sol = qc::approx_acp(in.word, m);
      } else {  // super
        if (metric_name != "hamming") {
          throw qc::InputError("--solver super ships with the squared-hamming metric; "
                               "drop --metric");
        }
        if (tolerance_str.empty()) throw qc::InputError("--solver super needs --tolerance");
        auto tol = qc::Rational::parse(tolerance_str);
        if (!tol) throw qc::InputError("--tolerance must be an integer or p/q");
        qc::SquaredHammingMetric sq;
        j["metric"] = sq.name();
        j["seed"] = seed;
        j["restarts"] = restarts;
        j["tolerance"] = tol->str();
        sol = qc::fpt_acp_superadditive(in.word, m, sq, *tol, restarts, seed, limits);
        if (!sol) {
          if (as_json) {
            j["found"] = false;
            if (timing) j["elapsed_ms"] = timer.ms();
            std::cout << j.dump() << "\n";
          } else {
            std::cerr << "no solution with distance under " << tol->str() << " after "
                      << restarts << " restarts\n";
          }
          return 4;
        }
      }

      std::optional<qc::CoverSolution> opt;
      if (with_oracle) {
        if (solver == "super") {
          qc::SquaredHammingMetric sq;
          opt = qc::brute_force_oracle(in.word, m, sq, limits);
        } else {
          opt = qc::brute_force_oracle(in.word, m, *metric, limits);
        }
      }

      if (as_json) {
        j["found"] = true;
        j["solution"] = solution_json(*sol, in.alphabet);
        if (opt) {
          j["optimum"] = solution_json(*opt, in.alphabet);
          if (metric_name == "hamming" && solver != "super") {
            j["efficiency"] = qc::efficiency(in.word, *sol, *opt).str();
          }
        }
        if (timing) j["elapsed_ms"] = timer.ms();
        std::cout << j.dump() << "\n";
      } else {
        print_solution(*sol, in.alphabet);
        if (opt) {
          print_solution(*opt, in.alphabet, "optimum ");
          if (metric_name == "hamming" && solver != "super") {
            std::cout << "efficiency: " << qc::efficiency(in.word, *sol, *opt).str() << "\n";
          }
        }
        if (timing) std::cout << "elapsed_ms: " << timer.ms() << "\n";
      }
      return 0;
    }

    if (quotient->parsed()) {
      qc::PseudometricTable t = qc::load_pseudometric_file(q_table_file);
      auto violations = qc::validate_pseudometric(t);
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "error: " << v.describe() << "\n";
        return 2;
      }
      WordInput in = make_word_for_table(text, symbols, t);
      qc::QuotientMap qm = qc::compute_quotient(t);

      Timer timer;
      qc::CoverSolution sol = qc::acp_pseudometric(in.word, q_m, t, limits);

      std::vector<std::vector<std::string>> classes(static_cast<std::size_t>(qm.class_count()));
      for (qc::Symbol a = 0; a < t.size(); ++a) {
        std::string label = t.labels.empty() ? std::to_string(a)
                                             : t.labels[static_cast<std::size_t>(a)];
        classes[static_cast<std::size_t>(qm.class_of[static_cast<std::size_t>(a)])]
            .push_back(std::move(label));
      }

      if (as_json) {
        json j;
        j["command"] = "quotient";
        j["word"] = render_word(in.word, in.alphabet);
        j["m"] = q_m;
        j["classes"] = classes;
        j["solution"] = solution_json(sol, in.alphabet);
        if (timing) j["elapsed_ms"] = timer.ms();
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& c : classes) {
          std::cout << "class:";
          for (const auto& l : c) std::cout << " " << l;
          std::cout << "\n";
        }
        print_solution(sol, in.alphabet);
        if (timing) std::cout << "elapsed_ms: " << timer.ms() << "\n";
      }
      return 0;
    }

    if (encode->parsed()) {
      qc::BlockCodeParams params(p);
      std::string line;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::uint64_t x = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), x);
        if (ec != std::errc() || ptr != line.data() + line.size()) {
          throw qc::InputError("not a non-negative integer: " + line);
        }
        std::vector<qc::Symbol> code = qc::psi_encode(x, params);
        if (as_json) {
          json j;
          j["value"] = x;
          j["code"] = code;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << render_starts(code) << "\n";
        }
      }
      return 0;
    }

    if (decode->parsed()) {
      qc::BlockCodeParams params(p);
      std::string line;
      bool any_invalid = false;
      int lineno = 0;
      while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::optional<std::uint64_t> value;
        std::vector<qc::Symbol> code;
        bool parsed_ok = true;
        std::size_t from = 0;
        while (from <= line.size() && parsed_ok) {
          std::size_t to = std::min(line.find(',', from), line.size());
          std::int32_t s = 0;
          auto [ptr, ec] = std::from_chars(line.data() + from, line.data() + to, s);
          if (ec != std::errc() || ptr != line.data() + to || s < 0 || s >= p) {
            parsed_ok = false;
          } else {
            code.push_back(s);
          }
          from = to + 1;
        }
        if (parsed_ok) value = qc::psi_decode(code, params);
        if (!value) any_invalid = true;
        if (as_json) {
          json j;
          j["line"] = lineno;
          if (value) {
            j["value"] = *value;
          } else {
            j["invalid"] = true;
          }
          std::cout << j.dump() << "\n";
        } else {
          std::cout << (value ? std::to_string(*value) : std::string("INVALID")) << "\n";
        }
      }
      return any_invalid ? 5 : 0;
    }

    if (bench->parsed()) {
      return run_bench(suite);
    }
  } catch (const qc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qc::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qc::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
