#include <doctest.h>

#include "alexlink/search.hpp"
#include "support.hpp"

using namespace alexlink;
using alexlink::testing::corpus;
using alexlink::testing::fixture;

namespace {

LinkDiagram apply(LinkDiagram d, const std::vector<int>& crossings) {
  for (int c : crossings) d = crossing_change(d, c);
  return d;
}

constexpr int kDepth = 3;

}  // namespace

TEST_CASE("search results replay and respect the mode") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto& d = f.diagram;
    for (auto mode : {SearchMode::inter_component, SearchMode::any_crossing})
      for (auto target : {SearchTarget::split, SearchTarget::unlink}) {
        const auto r = bounded_split_search(d, kDepth, mode, target);
        if (!r.found) {
          CHECK(r.depth == kDepth);
          continue;
        }
        CHECK(static_cast<int>(r.sequence.size()) == r.depth);
        CHECK(std::is_sorted(r.sequence.begin(), r.sequence.end()));
        const auto after = apply(d, r.sequence);
        CHECK(meets_target(after, target));
        CHECK(r.partition == split_partition(after));
        if (mode == SearchMode::inter_component)
          for (int c : r.sequence) CHECK(d.is_mixed(c));
      }
  }
}

TEST_CASE("deeper searches find the same shallowest hit") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    for (int k = 0; k < kDepth; ++k) {
      const auto a = bounded_split_search(f.diagram, k, SearchMode::any_crossing);
      const auto b = bounded_split_search(f.diagram, k + 1, SearchMode::any_crossing);
      if (a.found) {
        CHECK(b.found);
        CHECK(b.sequence == a.sequence);
      }
    }
  }
}

TEST_CASE("search upper bounds never undercut obstruction lower bounds") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto report = obstruct(f.diagram, f.name);
    std::map<Quantity, SearchResult> s{
        {Quantity::splitting, bounded_split_search(f.diagram, kDepth, SearchMode::inter_component)},
        {Quantity::weak_splitting, bounded_split_search(f.diagram, kDepth, SearchMode::any_crossing)},
        {Quantity::unlinking,
         bounded_split_search(f.diagram, kDepth, SearchMode::any_crossing, SearchTarget::unlink)}};
    for (const auto& [q, r] : s)
      if (r.found) CHECK(r.depth >= report.bounds.at(q).lower);
    const auto gaps = certify_gap(report, s);
    for (Quantity q : kAllQuantities)
      if (gaps.at(q).upper) CHECK(*gaps.at(q).upper >= gaps.at(q).lower);
  }
}

TEST_CASE("Hopf link splitting number is sandwiched") {
  const auto d = fixture("hopf_negative").diagram;
  const auto report = obstruct(d, "hopf");
  const auto gaps = certify_gap(report, {{Quantity::splitting, bounded_split_search(d, 1, SearchMode::inter_component)}});
  CHECK(gaps.at(Quantity::splitting).lower == 1);
  CHECK(gaps.at(Quantity::splitting).exact());
  CHECK_FALSE(gaps.at(Quantity::unlinking).upper.has_value());
}

TEST_CASE("a contradictory upper bound is a logic error") {
  const auto d = fixture("L8a16").diagram;
  const auto report = obstruct(d, "L8a16");
  SearchResult fake;
  fake.found = true;
  fake.depth = 1;
  fake.sequence = {0};
  CHECK_THROWS_AS(certify_gap(report, {{Quantity::splitting, fake}}), std::logic_error);
}

TEST_CASE("self-crossing change splits L_T into a trefoil and an unknot") {
  const auto d = fixture("L_T").diagram;
  const auto r = bounded_split_search(d, 1, SearchMode::any_crossing);
  REQUIRE(r.found);
  CHECK(r.sequence == std::vector<int>{5});
  CHECK_FALSE(d.is_mixed(5));
  CHECK_FALSE(bounded_split_search(d, 1, SearchMode::inter_component).found);
}

TEST_CASE("search budgets") {
  const auto d = fixture("L12n1320").diagram;
  CHECK_THROWS_AS(bounded_split_search(d, kMaxSearchDepth + 1, SearchMode::any_crossing), SearchBudgetExceeded);
  CHECK_THROWS_AS(bounded_split_search(d, -1, SearchMode::any_crossing), SearchBudgetExceeded);
  const auto none = bounded_split_search(fixture("unlink2").diagram, 0, SearchMode::any_crossing);
  CHECK(none.found);
  CHECK(none.depth == 0);
}
