// alexlink: Alexander-polynomial obstructions for link diagrams.
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexlink/report.hpp"

namespace {

using namespace alexlink;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

/// Output of one fixture, assembled off-thread and printed in input order.
struct Outcome {
  std::string out;
  std::string err;
  int status = 0;
  std::optional<ReportRecord> record;
};

struct FileList {
  std::vector<std::filesystem::path> files;
  std::string err;
  int status = 0;
};

FileList expand(const std::vector<std::string>& inputs) {
  FileList list;
  for (const auto& in : inputs) {
    try {
      auto paths = fixture_paths(in);
      if (paths.empty()) {
        list.err += in + ": no .link fixtures\n";
        list.status = kExitInput;
      }
      list.files.insert(list.files.end(), paths.begin(), paths.end());
    } catch (const std::exception& e) {
      list.err += std::string(e.what()) + "\n";
      list.status = kExitInput;
    }
  }
  return list;
}

template <class Work>
int run_batch(const std::vector<std::string>& inputs, Work work, bool table) {
  FileList list = expand(inputs);
  std::cerr << list.err;
  std::vector<std::future<Outcome>> jobs;
  for (const auto& path : list.files) jobs.push_back(std::async(std::launch::async, [path, &work] {
    Outcome o;
    try {
      o = work(load_fixture(path));
    } catch (const FixtureError& e) {
      o.err = std::string(e.what()) + "\n";
      o.status = kExitInput;
    } catch (const std::exception& e) {
      o.err = path.string() + ": " + e.what() + "\n";
      o.status = kExitFailure;
    }
    return o;
  }));
  int status = list.status;
  std::vector<ReportRecord> rows;
  for (auto& job : jobs) {
    Outcome o = job.get();
    std::cerr << o.err;
    if (!table) std::cout << o.out;
    if (o.record) rows.push_back(std::move(*o.record));
    status = std::max(status, o.status);
  }
  if (table) std::cout << format_table(rows);
  return status;
}

int cmd_report(const std::vector<std::string>& inputs, RecordOptions options, bool table) {
  return run_batch(
      inputs,
      [&options](const Fixture& f) {
        Outcome o;
        o.record = build_record(f, options);
        o.out = to_json(*o.record).dump() + "\n";
        return o;
      },
      table);
}

int cmd_search(const std::vector<std::string>& inputs, int depth, SearchMode mode, SearchTarget target) {
  return run_batch(
      inputs,
      [=](const Fixture& f) {
        const SearchResult r = bounded_split_search(f.diagram, depth, mode, target);
        std::vector<int> seq(r.sequence);
        for (int& c : seq) ++c;
        json j = {{"schema_version", kSchemaVersion},
                  {"kind", "search"},
                  {"name", f.name},
                  {"mode", mode == SearchMode::inter_component ? "inter" : "any"},
                  {"target", target == SearchTarget::split ? "split" : "unlink"},
                  {"max_depth", depth},
                  {"found", r.found},
                  {"depth", r.depth},
                  {"sequence", r.found ? json(seq) : json(nullptr)},
                  {"partition", r.found ? json(r.partition) : json(nullptr)}};
        Outcome o;
        o.out = j.dump() + "\n";
        return o;
      },
      false);
}

void print_factor_text(const LaurentPoly& p, std::ostream& out) {
  out << "polynomial: " << to_string(p) << "\n";
  if (p.is_zero()) {
    out << "zero polynomial: no factorization\n";
    return;
  }
  const Factorization f = factor_irreducible(p);
  out << "unit: " << (f.sign < 0 ? "-" : "") << to_string(f.monomial) << "\n";
  if (f.factors.empty()) out << "factors: none\n";
  for (const auto& x : f.factors) {
    out << "factor: " << to_string(x.poly.poly());
    if (x.multiplicity > 1) out << " ^" << x.multiplicity;
    if (is_negligible_factor(x.poly)) out << " (negligible)";
    out << "\n";
  }
  const NegligibleDecomposition n = negligible_decompose(p);
  out << "negligible core: " << to_string(n.core.poly()) << "\n";
  auto verdict = [&out](const char* label, const NormVerdict& v) {
    out << label << ": " << (v.is_norm ? "norm" : "not a norm");
    if (v.witness) out << ", f = " << to_string(*v.witness);
    for (const auto& b : v.blocking) out << ", unpaired " << to_string(b.poly());
    out << "\n";
  };
  verdict("up to negligible", is_norm_up_to_negligible(p));
  verdict("modulo univariate", is_norm_modulo_univariate(p));
}

json factor_json(const LaurentPoly& p) {
  json j = {{"schema_version", kSchemaVersion}, {"kind", "factor"}, {"polynomial", to_string(p)}, {"vars", p.var_count()}};
  if (p.is_zero()) {
    j["factorization"] = nullptr;
    return j;
  }
  j["factorization"] = to_json(factor_irreducible(p));
  j["negligible_core"] = to_string(negligible_decompose(p).core.poly());
  j["norm_up_to_negligible"] = to_json(is_norm_up_to_negligible(p));
  j["norm_modulo_univariate"] = to_json(is_norm_modulo_univariate(p));
  return j;
}

int cmd_factor(const std::string& text, int vars, bool as_json) {
  LaurentPoly p;
  try {
    p = parse_laurent(text, static_cast<std::size_t>(vars));
  } catch (const PolyParseError& e) {
    std::cerr << "error: invalid polynomial\n" << e.caret_diagnostic(text) << "\n";
    return kExitInput;
  }
  if (as_json) {
    std::cout << factor_json(p).dump() << "\n";
  } else {
    print_factor_text(p, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-polynomial obstructions to unlinking and splitting links"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  bool table = false;
  int depth = 0;
  std::string mode = "inter";
  std::string target = "split";
  std::string poly_text;
  int vars = 0;
  bool as_json = false;

  auto* inv = app.add_subcommand("invariants", "beta, Alexander polynomials and Conway polynomial per link");
  inv->add_option("paths", inputs, "fixture files or directories")->required();
  inv->add_flag("--table", table, "aligned text table instead of JSON lines");

  auto* obs = app.add_subcommand("obstruct", "lower bounds with reasons, optionally sandwiched by search");
  obs->add_option("paths", inputs, "fixture files or directories")->required();
  obs->add_flag("--table", table, "aligned text table instead of JSON lines");
  obs->add_option("--search-depth", depth, "crossing changes tried for upper bounds")
      ->check(CLI::Range(0, kMaxSearchDepth));

  auto* srch = app.add_subcommand("search", "bounded crossing-change search for a split or unlinked diagram");
  srch->add_option("paths", inputs, "fixture files or directories")->required();
  srch->add_option("--search-depth", depth, "maximum number of crossing changes")
      ->check(CLI::Range(0, kMaxSearchDepth))
      ->default_val(3);
  srch->add_option("--mode", mode, "crossings eligible for change")->check(CLI::IsMember({"inter", "any"}));
  srch->add_option("--target", target, "split diagram or unlink")->check(CLI::IsMember({"split", "unlink"}));

  auto* fac = app.add_subcommand("factor", "irreducible factorization and norm tests");
  fac->add_option("polynomial", poly_text, "e.g. \"(t1-1)*(t2*t3-1)\"")->required();
  fac->add_option("--vars", vars, "variable count; inferred when omitted")->check(CLI::Range(0, 64));
  fac->add_flag("--json", as_json, "JSON record instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  if (inv->parsed()) return cmd_report(inputs, {RecordKind::invariants, std::nullopt}, table);
  if (obs->parsed()) {
    RecordOptions options{RecordKind::obstruct, std::nullopt};
    if (obs->count("--search-depth")) options.search_depth = depth;
    return cmd_report(inputs, options, table);
  }
  if (srch->parsed())
    return cmd_search(inputs, depth, mode == "inter" ? SearchMode::inter_component : SearchMode::any_crossing,
                      target == "split" ? SearchTarget::split : SearchTarget::unlink);
  return cmd_factor(poly_text, vars, as_json);
}
