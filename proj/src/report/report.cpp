#include "alexlink/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace alexlink {

namespace {

using nlohmann::json;

json poly_json(const LaurentPoly& p) { return to_string(p); }

LaurentPoly poly_from(const json& j, std::size_t vars) { return parse_laurent(j.get<std::string>(), vars); }

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

NormVerdict verdict_from(const json& j, std::size_t vars) {
  NormVerdict v;
  v.is_norm = j.at("is_norm").get<bool>();
  if (!j.at("witness").is_null()) v.witness = poly_from(j.at("witness"), vars);
  if (j.contains("co_witness") && !j.at("co_witness").is_null()) v.co_witness = poly_from(j.at("co_witness"), vars);
  for (const auto& b : j.at("blocking")) v.blocking.push_back(normalize_unit(poly_from(b, vars)));
  return v;
}

Factorization factorization_from(const json& j, std::size_t vars) {
  Factorization f;
  f.sign = j.at("sign").get<int>();
  f.monomial = Monomial(j.at("monomial").get<std::vector<int>>());
  for (const auto& item : j.at("factors"))
    f.factors.push_back({normalize_unit(poly_from(item.at("poly"), vars)), item.at("multiplicity").get<int>()});
  return f;
}

std::string interval_text(const QuantityRecord& q) {
  if (q.status == "inconclusive") return "inconclusive";
  std::string s = q.upper ? (q.bound.lower == *q.upper ? "=" + std::to_string(*q.upper)
                                                        : std::to_string(q.bound.lower) + ".." + std::to_string(*q.upper))
                          : ">=" + std::to_string(q.bound.lower);
  if (q.known) s += " (" + std::to_string(*q.known) + ")";
  return s;
}

}  // namespace

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& x : f.factors) factors.push_back({{"poly", to_string(x.poly.poly())}, {"multiplicity", x.multiplicity}});
  return {{"sign", f.sign}, {"monomial", f.monomial.exponents()}, {"factors", std::move(factors)}};
}

json to_json(const NormVerdict& v) {
  json blocking = json::array();
  for (const auto& b : v.blocking) blocking.push_back(to_string(b.poly()));
  json out = {{"is_norm", v.is_norm},
              {"witness", v.witness ? json(to_string(*v.witness)) : json(nullptr)},
              {"blocking", std::move(blocking)}};
  if (v.co_witness) out["co_witness"] = to_string(*v.co_witness);
  return out;
}

ReportRecord build_record(const Fixture& fixture, const RecordOptions& options) {
  const LinkDiagram& d = fixture.diagram;
  ReportRecord r;
  r.kind = options.kind;
  r.name = fixture.name;
  r.components = d.component_count();
  r.crossings = d.crossing_count();
  for (int i = 0; i < r.components; ++i)
    for (int j = i + 1; j < r.components; ++j) r.linking_numbers.push_back({i, j, linking_number(d, i, j)});
  try {
    r.conway = conway_polynomial(d, options.conway_budget);
  } catch (const CrossingBudgetExceeded& e) {
    r.conway_error = e.what();
  }

  ObstructionReport rep = obstruct(d, fixture.name);
  r.beta = rep.alexander.beta;
  r.delta = rep.alexander.delta;
  r.delta_tor = rep.alexander.delta_tor;
  if (!r.delta.is_zero()) r.delta_factorization = factor_irreducible(r.delta);
  r.component_polys = rep.component_polys;
  if (options.kind == RecordKind::invariants) return r;

  std::map<Quantity, SearchResult> searches;
  if (options.search_depth) {
    const int depth = *options.search_depth;
    searches[Quantity::splitting] = bounded_split_search(d, depth, SearchMode::inter_component);
    searches[Quantity::weak_splitting] = bounded_split_search(d, depth, SearchMode::any_crossing);
    searches[Quantity::unlinking] = bounded_split_search(d, depth, SearchMode::any_crossing, SearchTarget::unlink);
  }
  const auto gaps = certify_gap(rep, searches);
  for (Quantity q : kAllQuantities) {
    QuantityRecord& out = r.quantities[q];
    out.bound = rep.bounds.at(q);
    out.upper = gaps.at(q).upper;
    if (auto it = searches.find(q); it != searches.end() && it->second.found) out.sequence = one_based(it->second.sequence);
    const std::string key(to_string(q));
    if (auto it = fixture.known.find(key); it != fixture.known.end()) out.known = it->second;
    if (auto it = fixture.open.find(key); it != fixture.open.end()) out.open = it->second;
    out.status = out.open ? "inconclusive" : gaps.at(q).exact() ? "exact" : "bound";
  }
  return r;
}

json to_json(const ReportRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = r.kind == RecordKind::invariants ? "invariants" : "obstruct";
  j["name"] = r.name;
  j["components"] = r.components;
  j["crossings"] = r.crossings;
  j["beta"] = r.beta;
  j["delta"] = poly_json(r.delta);
  j["delta_tor"] = poly_json(r.delta_tor);
  j["delta_factorization"] = r.delta_factorization ? to_json(*r.delta_factorization) : json(nullptr);
  j["component_polys"] = json::array();
  for (const auto& p : r.component_polys) j["component_polys"].push_back(poly_json(p));
  j["linking_numbers"] = json::array();
  for (const auto& [a, b, lk] : r.linking_numbers) j["linking_numbers"].push_back({{"i", a + 1}, {"j", b + 1}, {"lk", lk}});
  if (r.conway) {
    json coeffs = json::array();
    for (const auto& c : r.conway->coefficients) coeffs.push_back(c.get_str());
    j["conway"] = {{"text", to_string(*r.conway)}, {"coefficients", std::move(coeffs)}};
  } else {
    j["conway"] = nullptr;
  }
  if (r.conway_error) j["conway_error"] = *r.conway_error;
  if (r.kind == RecordKind::obstruct) {
    json bounds = json::object();
    for (const auto& [q, rec] : r.quantities) {
      json b = {{"lower", rec.bound.lower},
                {"reasons", rec.bound.reasons},
                {"norm", rec.bound.norm ? to_json(*rec.bound.norm) : json(nullptr)},
                {"upper", rec.upper ? json(*rec.upper) : json(nullptr)},
                {"sequence", rec.sequence ? json(*rec.sequence) : json(nullptr)},
                {"known", rec.known ? json(*rec.known) : json(nullptr)},
                {"open", rec.open ? json({rec.open->first, rec.open->second}) : json(nullptr)},
                {"status", rec.status}};
      bounds[std::string(to_string(q))] = std::move(b);
    }
    j["bounds"] = std::move(bounds);
  }
  return j;
}

ReportRecord record_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  ReportRecord r;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "invariants" && kind != "obstruct") throw std::invalid_argument("unknown record kind " + kind);
  r.kind = kind == "invariants" ? RecordKind::invariants : RecordKind::obstruct;
  r.name = j.at("name").get<std::string>();
  r.components = j.at("components").get<int>();
  r.crossings = j.at("crossings").get<int>();
  const auto vars = static_cast<std::size_t>(r.components);
  r.beta = j.at("beta").get<int>();
  r.delta = poly_from(j.at("delta"), vars);
  r.delta_tor = poly_from(j.at("delta_tor"), vars);
  if (!j.at("delta_factorization").is_null()) r.delta_factorization = factorization_from(j.at("delta_factorization"), vars);
  for (const auto& p : j.at("component_polys")) r.component_polys.push_back(poly_from(p, vars));
  for (const auto& l : j.at("linking_numbers"))
    r.linking_numbers.push_back({l.at("i").get<int>() - 1, l.at("j").get<int>() - 1, l.at("lk").get<int>()});
  if (!j.at("conway").is_null()) {
    ConwayPoly c;
    for (const auto& s : j.at("conway").at("coefficients")) c.coefficients.emplace_back(s.get<std::string>());
    r.conway = std::move(c);
  }
  if (j.contains("conway_error")) r.conway_error = j.at("conway_error").get<std::string>();
  if (r.kind == RecordKind::obstruct) {
    for (const auto& [key, b] : j.at("bounds").items()) {
      auto q = parse_quantity(key);
      if (!q) throw std::invalid_argument("unknown quantity " + key);
      QuantityRecord rec;
      rec.bound.lower = b.at("lower").get<int>();
      rec.bound.reasons = b.at("reasons").get<std::vector<std::string>>();
      if (!b.at("norm").is_null()) rec.bound.norm = verdict_from(b.at("norm"), vars);
      if (!b.at("upper").is_null()) rec.upper = b.at("upper").get<int>();
      if (!b.at("sequence").is_null()) rec.sequence = b.at("sequence").get<std::vector<int>>();
      if (!b.at("known").is_null()) rec.known = b.at("known").get<int>();
      if (!b.at("open").is_null()) rec.open = std::pair{b.at("open").at(0).get<int>(), b.at("open").at(1).get<int>()};
      rec.status = b.at("status").get<std::string>();
      r.quantities[*q] = std::move(rec);
    }
  }
  return r;
}

std::string format_table(const std::vector<ReportRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"link", "m", "beta", "delta_core", "unlinking", "splitting", "weak_splitting"});
  for (const auto& r : records) {
    std::string delta = r.delta.is_zero() ? "0" : "nonzero";
    if (r.delta_factorization) {
      int nontrivial = 0;
      for (const auto& f : r.delta_factorization->factors)
        if (!is_negligible_factor(f.poly)) nontrivial += f.multiplicity;
      delta = nontrivial == 0 ? "negligible" : std::to_string(nontrivial) + " factor" + (nontrivial == 1 ? "" : "s");
    }
    std::vector<std::string> row{r.name, std::to_string(r.components), std::to_string(r.beta), delta};
    for (Quantity q : kAllQuantities) {
      auto it = r.quantities.find(q);
      row.push_back(it == r.quantities.end() ? "-" : interval_text(it->second));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace alexlink
