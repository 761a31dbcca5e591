// Command-line surface for the Motzkin path / excessive multisegment toolkit:
// classify multisegments, convert between the two families, enumerate,
// render ASCII diagrams and run the invariant suite.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motzseg/correspondence.hpp"
#include "motzseg/errors.hpp"
#include "motzseg/monoid.hpp"
#include "motzseg/motzkin.hpp"
#include "motzseg/multisegment.hpp"
#include "motzseg/render.hpp"
#include "motzseg/selftest.hpp"

namespace {

using motzseg::ColumnProfile;
using motzseg::Factorization;
using motzseg::LinkedTriple;
using motzseg::MotzkinPath;
using motzseg::Multisegment;
using motzseg::RankTuple;
using json = nlohmann::ordered_json;

constexpr int kWitnessCap = 10;
constexpr int kListingCap = 14;

json rank_to_json(const RankTuple& r) {
  json rows = json::array();
  for (int i = 1; i <= r.length(); ++i) {
    json row = json::array();
    for (int j = i; j <= r.length(); ++j) row.push_back(r.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int run_classify(const std::string& literal, bool json_mode) {
  const Multisegment m = motzseg::parse_multisegment(literal);
  const bool weight_valid = motzseg::is_weight_valid(m);
  const std::vector<int> w = motzseg::weight(m);

  std::vector<ColumnProfile> columns;
  if (weight_valid) columns = motzseg::column_profiles(m);
  const bool flat = motzseg::is_flat(m);
  const auto triples = motzseg::find_linked_triples(m);
  const bool excessive = flat && triples.empty();
  const bool suspension = motzseg::is_suspension(m);
  std::optional<Factorization> factorization;
  if (flat && m.length() >= 1) factorization = motzseg::factorize(m);

  const std::size_t shown =
      std::min<std::size_t>(triples.size(), kWitnessCap);

  if (json_mode) {
    json doc;
    doc["input"] = literal;
    doc["canonical"] = motzseg::to_string(m);
    doc["length"] = m.length();
    doc["weight"] = w;
    doc["weightValid"] = weight_valid;
    json cols = json::array();
    for (const ColumnProfile& p : columns) {
      cols.push_back({{"column", p.column},
                      {"crossings", p.crossings},
                      {"cuts", p.cuts},
                      {"full", p.full},
                      {"specialFull", p.special_full}});
    }
    doc["columns"] = std::move(cols);
    doc["flat"] = flat;
    doc["excessive"] = excessive;
    json witnesses = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      witnesses.push_back({motzseg::to_string(triples[i].a),
                           motzseg::to_string(triples[i].b),
                           motzseg::to_string(triples[i].c)});
    }
    doc["linkedTriples"] = std::move(witnesses);
    doc["linkedTriplesTruncated"] = triples.size() > shown;
    doc["suspension"] = suspension;
    if (factorization) {
      json factors = json::array();
      for (const Multisegment& f : factorization->factors) {
        factors.push_back(motzseg::to_string(f));
      }
      doc["factorization"] = {{"factors", std::move(factors)},
                              {"splitColumns", factorization->split_columns}};
    } else {
      doc["factorization"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "canonical: " << motzseg::to_string(m) << "\n";
  std::cout << "weight: (" << join_ints(w, ",") << ")\n";
  std::cout << "weight-valid: " << (weight_valid ? "yes" : "no") << "\n";
  for (const ColumnProfile& p : columns) {
    std::cout << "column " << p.column << ": crossings=" << p.crossings
              << " cuts=" << p.cuts;
    if (p.special_full) {
      std::cout << " (special full)";
    } else if (p.full) {
      std::cout << " (full)";
    }
    std::cout << "\n";
  }
  std::cout << "flat (at most one cut per column): " << (flat ? "yes" : "no")
            << "\n";
  std::cout << "excessive: " << (excessive ? "yes" : "no") << "\n";
  if (!triples.empty()) {
    std::cout << "linked triples (" << shown << " shown of " << triples.size()
              << "):\n";
    for (std::size_t i = 0; i < shown; ++i) {
      std::cout << "  " << motzseg::to_string(triples[i]) << "\n";
    }
  }
  std::cout << "suspension: " << (suspension ? "yes" : "no") << "\n";
  if (factorization) {
    if (factorization->factors.size() <= 1) {
      std::cout << "factorization: primitive\n";
    } else {
      std::cout << "factorization:\n";
      for (std::size_t i = 0; i < factorization->factors.size(); ++i) {
        std::cout << "  factor " << (i + 1) << ": "
                  << motzseg::to_string(factorization->factors[i]) << "\n";
      }
      std::cout << "  split columns: "
                << join_ints(factorization->split_columns, ",") << "\n";
    }
  }
  return 0;
}

int run_fr(const std::string& literal, bool json_mode) {
  const MotzkinPath g = motzseg::parse_path(literal);
  const Multisegment m = motzseg::fr(g);
  if (json_mode) {
    json doc;
    doc["direction"] = "fr";
    doc["input"] = literal;
    doc["path"] = motzseg::to_string(g);
    doc["multisegment"] = motzseg::to_string(m);
    doc["rank"] = rank_to_json(motzseg::rank_tuple(m));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << motzseg::to_string(m) << "\n";
  }
  return 0;
}

int run_fr_inverse(const std::string& literal, bool json_mode) {
  const Multisegment m = motzseg::parse_multisegment(literal);
  const MotzkinPath g = motzseg::fr_inverse(m);
  if (json_mode) {
    json doc;
    doc["direction"] = "fr-inverse";
    doc["input"] = literal;
    doc["multisegment"] = motzseg::to_string(m);
    doc["path"] = motzseg::to_string(g);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << motzseg::to_string(g) << "\n";
  }
  return 0;
}

int run_enumerate(const std::string& kind, int n, bool count_only,
                  bool json_mode, bool force) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kListingCap && !force) {
    throw std::invalid_argument(
        "n=" + std::to_string(n) + " exceeds the listing guardrail " +
        std::to_string(kListingCap) + "; pass --force to override");
  }

  if (kind == "paths") {
    const auto paths = motzseg::enumerate_paths(n);
    if (static_cast<std::int64_t>(paths.size()) != motzseg::motzkin_number(n)) {
      throw std::logic_error("enumeration disagrees with the recurrence");
    }
    if (json_mode) {
      json doc;
      doc["kind"] = "paths";
      doc["n"] = n;
      doc["count"] = paths.size();
      if (!count_only) {
        json list = json::array();
        for (const MotzkinPath& g : paths) list.push_back(motzseg::to_string(g));
        doc["paths"] = std::move(list);
      }
      std::cout << doc.dump(2) << "\n";
    } else if (count_only) {
      std::cout << paths.size() << "\n";
    } else {
      for (const MotzkinPath& g : paths) {
        std::cout << motzseg::to_string(g) << "\n";
      }
    }
    return 0;
  }

  const auto entries = motzseg::enumerate_excessive(n);
  if (static_cast<std::int64_t>(entries.size()) != motzseg::motzkin_number(n)) {
    throw std::logic_error("enumeration disagrees with the recurrence");
  }
  if (json_mode) {
    json doc;
    doc["kind"] = "excessive";
    doc["n"] = n;
    doc["count"] = entries.size();
    if (!count_only) {
      json list = json::array();
      for (const auto& e : entries) {
        list.push_back({{"path", motzseg::to_string(e.path)},
                        {"multisegment", motzseg::to_string(e.multisegment)},
                        {"rank", rank_to_json(e.rank)}});
      }
      doc["entries"] = std::move(list);
    }
    std::cout << doc.dump(2) << "\n";
  } else if (count_only) {
    std::cout << entries.size() << "\n";
  } else {
    for (const auto& e : entries) {
      std::cout << motzseg::to_string(e.path) << "\t"
                << motzseg::to_string(e.multisegment) << "\tr="
                << motzseg::to_string(e.rank) << "\n";
    }
  }
  return 0;
}

int run_render(const std::string& literal) {
  std::size_t first = 0;
  while (first < literal.size() &&
         std::isspace(static_cast<unsigned char>(literal[first]))) {
    ++first;
  }
  if (literal.compare(first, 2, "n=") == 0) {
    std::cout << motzseg::render(motzseg::parse_multisegment(literal));
  } else {
    std::cout << motzseg::render(motzseg::parse_path(literal));
  }
  return 0;
}

int run_selftest_command(const motzseg::SelftestOptions& options) {
  const auto results = motzseg::run_selftest(options);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail
              << "\n";
  }
  std::cout << "selftest: " << (results.size() - failures) << "/"
            << results.size() << " checks passed (n-max "
            << options.n_max << ", samples " << options.samples << ", seed "
            << options.seed << ", oracle-max " << options.oracle_max << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motzkin paths and excessive multisegments"};
  app.require_subcommand(1);

  std::string literal;
  bool json_mode = false;

  auto* classify = app.add_subcommand(
      "classify", "Report weight, columns, class membership and factors");
  classify->add_option("literal", literal, "multisegment literal `n=3: 1-2,...`")
      ->required();
  classify->add_flag("--json", json_mode, "emit one JSON document");

  auto* fr_cmd =
      app.add_subcommand("fr", "Map a Motzkin path to its multisegment");
  fr_cmd->add_option("literal", literal, "path literal `heights:...` or `steps:...`")
      ->required();
  fr_cmd->add_flag("--json", json_mode, "emit one JSON document");

  auto* fr_inv_cmd = app.add_subcommand(
      "fr-inverse", "Map an excessive multisegment back to its path");
  fr_inv_cmd->add_option("literal", literal, "multisegment literal")->required();
  fr_inv_cmd->add_flag("--json", json_mode, "emit one JSON document");

  std::string kind;
  int n = 0;
  bool count_only = false;
  bool force = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "List paths or excessive multisegments");
  enumerate->add_option("kind", kind, "paths or excessive")
      ->required()
      ->check(CLI::IsMember({"paths", "excessive"}));
  enumerate->add_option("n", n, "length")->required();
  enumerate->add_flag("--count-only", count_only,
                      "print only the count, checked against the recurrence");
  enumerate->add_flag("--json", json_mode, "emit one JSON document");
  enumerate->add_flag("--force", force, "lift the n <= 14 listing guardrail");

  auto* render = app.add_subcommand(
      "render", "Draw a multisegment or path as an ASCII diagram");
  render->add_option("literal", literal, "multisegment or path literal")
      ->required();

  motzseg::SelftestOptions selftest_options;
  auto* selftest =
      app.add_subcommand("selftest", "Run the full invariant suite");
  selftest->add_option("--n-max", selftest_options.n_max,
                       "exhaustive cap on path length");
  selftest->add_option("--samples", selftest_options.samples,
                       "randomized cases per sampled check");
  selftest->add_option("--seed", selftest_options.seed, "sampling seed");
  selftest->add_option("--oracle-max", selftest_options.oracle_max,
                       "brute-force universe cap (at most 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify->parsed()) return run_classify(literal, json_mode);
    if (fr_cmd->parsed()) return run_fr(literal, json_mode);
    if (fr_inv_cmd->parsed()) return run_fr_inverse(literal, json_mode);
    if (enumerate->parsed()) {
      return run_enumerate(kind, n, count_only, json_mode, force);
    }
    if (render->parsed()) return run_render(literal);
    if (selftest->parsed()) return run_selftest_command(selftest_options);
  } catch (const motzseg::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const motzseg::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
