#include <doctest.h>

#include "alexlink/report.hpp"
#include "support.hpp"

using namespace alexlink;
using alexlink::testing::corpus;
using alexlink::testing::fixture;

TEST_CASE("records round-trip through JSON") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    for (auto kind : {RecordKind::invariants, RecordKind::obstruct}) {
      RecordOptions o;
      o.kind = kind;
      if (kind == RecordKind::obstruct) o.search_depth = 2;
      const auto j = to_json(build_record(f, o));
      CHECK(j.at("schema_version") == kSchemaVersion);
      CHECK(to_json(record_from_json(j)) == j);
      CHECK(to_json(record_from_json(nlohmann::json::parse(j.dump()))) == j);
    }
  }
}

TEST_CASE("open annotations are inconclusive and known values stay external") {
  RecordOptions o;
  o.kind = RecordKind::obstruct;
  const auto r = build_record(fixture("L9a30"), o);
  CHECK(r.quantities.at(Quantity::unlinking).status == "inconclusive");
  CHECK(r.quantities.at(Quantity::unlinking).open == std::pair{2, 3});
  const auto w = build_record(fixture("whitehead"), o);
  CHECK(w.quantities.at(Quantity::unlinking).known == 1);
  CHECK(w.quantities.at(Quantity::unlinking).bound.lower == 1);
}

TEST_CASE("records without search carry no upper bounds") {
  RecordOptions o;
  o.kind = RecordKind::obstruct;
  const auto j = to_json(build_record(fixture("L8a16"), o));
  CHECK(j.at("bounds").at("splitting").at("upper").is_null());
  CHECK(j.at("bounds").at("splitting").at("lower") == 3);
}

TEST_CASE("invariants records omit bounds") {
  const auto j = to_json(build_record(fixture("trefoil"), {}));
  CHECK_FALSE(j.contains("bounds"));
  CHECK(j.at("conway").at("text") == "z^2 + 1");
}

TEST_CASE("malformed records are rejected") {
  auto j = to_json(build_record(fixture("trefoil"), {}));
  j["schema_version"] = 99;
  CHECK_THROWS(record_from_json(j));
  j = to_json(build_record(fixture("trefoil"), {}));
  j.erase("delta");
  CHECK_THROWS(record_from_json(j));
}

TEST_CASE("table has a header and one row per record") {
  std::vector<ReportRecord> rows;
  RecordOptions o;
  o.kind = RecordKind::obstruct;
  for (const char* name : {"hopf_negative", "L8a16"}) rows.push_back(build_record(fixture(name), o));
  const auto t = format_table(rows);
  CHECK(std::count(t.begin(), t.end(), '\n') == 3);
  CHECK(t.rfind("link", 0) == 0);
  CHECK(t.find("L8a16  ") != std::string::npos);
}
