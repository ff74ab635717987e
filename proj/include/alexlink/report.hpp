// Serializable per-link records: invariants, bounds and search results.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alexlink/factor.hpp"
#include "alexlink/fixture.hpp"
#include "alexlink/invariants.hpp"
#include "alexlink/obstructions.hpp"
#include "alexlink/search.hpp"

namespace alexlink {

inline constexpr int kSchemaVersion = 1;

enum class RecordKind { invariants, obstruct };

struct RecordOptions {
  RecordKind kind = RecordKind::invariants;
  /// Adds upper bounds from bounded searches when set (obstruct only).
  std::optional<int> search_depth;
  int conway_budget = kDefaultConwayBudget;
};

struct QuantityRecord {
  Bound bound;
  std::optional<int> upper;
  std::optional<std::vector<int>> sequence;
  std::optional<int> known;
  std::optional<std::pair<int, int>> open;
  /// "inconclusive" for open annotations, "exact" when lower = upper,
  /// otherwise "bound".
  std::string status = "bound";
};

struct ReportRecord {
  RecordKind kind = RecordKind::invariants;
  std::string name;
  int components = 0;
  int crossings = 0;
  int beta = 0;
  LaurentPoly delta;
  LaurentPoly delta_tor;
  std::optional<Factorization> delta_factorization;
  std::vector<LaurentPoly> component_polys;
  /// i < j, zero-based.
  std::vector<std::array<int, 3>> linking_numbers;
  std::optional<ConwayPoly> conway;
  std::optional<std::string> conway_error;
  std::map<Quantity, QuantityRecord> quantities;
};

ReportRecord build_record(const Fixture& fixture, const RecordOptions& options);

nlohmann::json to_json(const ReportRecord& r);
/// Inverse of to_json; throws nlohmann::json::exception or PolyParseError on
/// malformed input.
ReportRecord record_from_json(const nlohmann::json& j);

/// One aligned row per record.
std::string format_table(const std::vector<ReportRecord>& records);

nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const NormVerdict& v);

}  // namespace alexlink
