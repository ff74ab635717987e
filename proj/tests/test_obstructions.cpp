#include <doctest.h>

#include <algorithm>

#include "alexlink/obstructions.hpp"
#include "support.hpp"

using namespace alexlink;
using alexlink::testing::associate;
using alexlink::testing::corpus;
using alexlink::testing::fixture;
using alexlink::testing::P;

namespace {

bool has_reason(const Bound& b, std::string_view r) {
  return std::find(b.reasons.begin(), b.reasons.end(), r) != b.reasons.end();
}

}  // namespace

TEST_CASE("quantity names round-trip") {
  for (Quantity q : kAllQuantities) CHECK(parse_quantity(to_string(q)) == q);
  CHECK_FALSE(parse_quantity("genus").has_value());
}

TEST_CASE("rank bound alone for unlinks and split unions") {
  for (const char* name : {"unlink2", "unlink3", "unlink4", "unknot"}) {
    CAPTURE(name);
    const auto r = obstruct(fixture(name).diagram, name);
    for (Quantity q : kAllQuantities) CHECK(r.bounds.at(q).lower == 0);
  }
}

TEST_CASE("norm rules raise nonzero Delta to m - 1 plus one") {
  const auto r = obstruct(fixture("L8a16").diagram, "L8a16");
  CHECK(r.bounds.at(Quantity::unlinking).lower == 3);
  CHECK(has_reason(r.bounds.at(Quantity::unlinking), reason::norm));
  CHECK(r.bounds.at(Quantity::weak_splitting).lower == 3);
  CHECK(has_reason(r.bounds.at(Quantity::weak_splitting), reason::univariate_norm));
  CHECK(r.bounds.at(Quantity::splitting).lower == 3);
}

TEST_CASE("a norm Delta stops at the rank bound") {
  const auto r = obstruct(fixture("whitehead").diagram, "whitehead");
  CHECK(r.bounds.at(Quantity::unlinking).lower == 1);
  CHECK(r.bounds.at(Quantity::unlinking).norm->is_norm);
  CHECK(r.bounds.at(Quantity::splitting).lower == 2);
  CHECK(has_reason(r.bounds.at(Quantity::splitting), reason::parity));
}

TEST_CASE("splitting bound uses the component polynomials") {
  const AlexanderData a{0, P("(t1 - 1)*(t2 - 1)*(t1^2 - t1 + 1)", 2), P("(t1 - 1)*(t2 - 1)*(t1^2 - t1 + 1)", 2)};
  const std::vector<LaurentPoly> comps{P("t1^2 - t1 + 1", 2), P("1", 2)};
  CHECK(splitting_bound(a, comps, 2).lower == 1);
  const std::vector<LaurentPoly> none{P("1", 2), P("1", 2)};
  CHECK(splitting_bound(a, none, 2).lower == 2);
  CHECK(weak_splitting_bound(a, 2).lower == 1);
  CHECK(unlinking_bound(a, 2).lower == 2);
}

TEST_CASE("parity refinement") {
  const auto hopf = fixture("hopf_positive").diagram;
  CHECK(parity_refine(0, hopf) == 1);
  CHECK(parity_refine(1, hopf) == 1);
  CHECK(parity_refine(2, hopf) == 3);
  const auto b = parity_refine(Bound{2, {std::string(reason::rank)}, std::nullopt}, hopf);
  CHECK(b.lower == 3);
  CHECK(has_reason(b, reason::parity));
  CHECK(parity_refine(2, fixture("whitehead").diagram) == 2);
}

TEST_CASE("lower bounds are monotone in the rules on the corpus") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto r = obstruct(f.diagram, f.name);
    const int m = f.diagram.component_count();
    for (Quantity q : kAllQuantities) {
      const auto& b = r.bounds.at(q);
      CHECK(b.lower >= m - 1 - r.alexander.beta);
      CHECK_FALSE(b.reasons.empty());
      CHECK(b.reasons.front() == reason::rank);
    }
    CHECK(r.bounds.at(Quantity::weak_splitting).lower <= r.bounds.at(Quantity::splitting).lower);
    for (const auto& [q, v] : f.known) CHECK(r.bounds.at(*parse_quantity(q)).lower <= v);
  }
}

TEST_CASE("Gordian distance rank bound and extremal divisibility") {
  const auto unlink = alexander_data(fixture("unlink2").diagram);
  const auto hopf = alexander_data(fixture("hopf_positive").diagram);
  const auto white = alexander_data(fixture("whitehead").diagram);
  CHECK(gordian_rank_bound(hopf, unlink) == 1);
  CHECK(gordian_rank_bound(unlink, unlink) == 0);
  CHECK_THROWS_AS(gordian_rank_bound(hopf, alexander_data(fixture("unlink3").diagram)), std::invalid_argument);
  const auto v = gordian_extremal_divisibility(white, unlink);
  CHECK(v.compatible);
  const auto t = alexander_data(fixture("L4a1").diagram);
  CHECK_FALSE(gordian_extremal_divisibility(t, unlink).compatible);
  CHECK_THROWS_AS(gordian_extremal_divisibility(unlink, hopf), std::invalid_argument);
}

TEST_CASE("splitting-sequence knot constraint") {
  const auto a = alexander_data(fixture("L_T").diagram);
  const auto trefoil = P("t1^2 - t1 + 1", 2);
  CHECK(splitting_sequence_knot_constraint(a, trefoil, trefoil).is_norm);
  CHECK_FALSE(splitting_sequence_knot_constraint(a, trefoil, P("1", 2)).is_norm);
  CHECK_THROWS_AS(splitting_sequence_knot_constraint(alexander_data(fixture("unlink2").diagram), trefoil, trefoil),
                  std::invalid_argument);
}

TEST_CASE("forced knot complexity") {
  const auto l = alexander_data(fixture("L_T").diagram).delta;
  const auto k = forced_knot_complexity(l, P("t^2 - t + 1", 1));
  CHECK(k.min_alexander_degree == 2);
  CHECK(k.min_crossings == 3);
  CHECK_THROWS_AS(forced_knot_complexity(l, P("t^2 - 3*t + 1", 1)), std::invalid_argument);
  CHECK_THROWS_AS(forced_knot_complexity(l * P("t1^2 - t1 + 1", 2), P("t^2 - t + 1", 1)), std::invalid_argument);
  CHECK_THROWS_AS(forced_knot_complexity(l, P("t - 1", 1)), std::invalid_argument);
}

TEST_CASE("band-clasping check") {
  const auto trefoil = P("t^2 - t + 1", 1);
  const auto trivial = band_clasping_check(P("(t1^2 - t1 + 1)*(t2^2 - t2 + 1)", 2), trefoil, trefoil);
  CHECK(trivial.holds);
  CHECK(trivial.trivial);
  const auto fails = band_clasping_check(P("(t1^2 - t1 + 1)*(t2^2 - t2 + 1)*(t1 + t2)", 2), trefoil, trefoil);
  CHECK_FALSE(fails.holds);
  CHECK_FALSE(fails.blocking.empty());
  CHECK_THROWS_AS(band_clasping_check(P("0", 2), trefoil, trefoil), std::invalid_argument);
}
