#include <doctest.h>

#include "alexlink/invariants.hpp"
#include "support.hpp"

using namespace alexlink;
using alexlink::testing::associate;
using alexlink::testing::corpus;
using alexlink::testing::fixture;
using alexlink::testing::P;
using alexlink::testing::PolyGen;

namespace {

LaurentPoly laplace(const PolyMatrix& m, std::size_t vars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(vars, 1);
  LaurentPoly out(vars);
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly term = m[0][c] * laplace(minor, vars);
    if (c % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

PolyMatrix random_matrix(PolyGen& gen, std::size_t rows, std::size_t cols, std::size_t vars) {
  PolyMatrix m(rows, std::vector<LaurentPoly>(cols, LaurentPoly(vars)));
  for (auto& row : m)
    for (auto& x : row) x = gen.poly(vars, 2, -1, 1, 3);
  return m;
}

PolyMatrix product(const PolyMatrix& a, const PolyMatrix& b, std::size_t vars) {
  PolyMatrix out(a.size(), std::vector<LaurentPoly>(b.front().size(), LaurentPoly(vars)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

LaurentPoly at_minus_one(const LaurentPoly& p) {
  LaurentPoly out(1);
  for (const auto& [m, c] : p.terms()) out += LaurentPoly::constant(1, (m[0] % 2 == 0) ? c : Integer(-c));
  return out;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  PolyGen gen(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto m = random_matrix(gen, n, n, 2);
    CHECK(determinant(m, 2) == laplace(m, 2));
  }
}

TEST_CASE("unit elimination preserves the determinant up to units") {
  PolyGen gen(32);
  for (int i = 0; i < 300; ++i) {
    auto m = random_matrix(gen, 4, 4, 2);
    m[gen.uniform(0, 3)][gen.uniform(0, 3)] = LaurentPoly::monomial(Monomial{gen.uniform(-2, 2), 0}, -1);
    const auto d = determinant(m, 2);
    const auto red = eliminate_units(m);
    CHECK(red.pivots >= 1);
    const auto rest = red.rest.empty() ? LaurentPoly::constant(2, 1) : determinant(red.rest, 2);
    CHECK(associate(d, rest));
  }
}

TEST_CASE("randomized rank agrees with exact rank") {
  PolyGen gen(33);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto m = product(random_matrix(gen, 4, r, 2), random_matrix(gen, r, 5, 2), 2);
    const int exact = exact_rank(m, 2);
    CHECK(exact <= static_cast<int>(r));
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(randomized_rank(m, seed) <= exact);
    int best = 0;
    for (std::uint64_t seed : {1u, 2u, 3u}) best = std::max(best, randomized_rank(m, seed));
    CHECK(best == exact);
  }
}

TEST_CASE("minors gcd") {
  const PolyMatrix m{{P("t - 1", 1), P("0", 1)}, {P("0", 1), P("t^2 - 1", 1)}};
  CHECK(associate(minors_gcd(m, 1, 1), P("t - 1", 1)));
  CHECK(associate(minors_gcd(m, 1, 2), P("(t - 1)^2*(t + 1)", 1)));
}

TEST_CASE("beta is at most m - 1 and Delta is symmetric on the corpus") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto a = alexander_data(f.diagram);
    const int m = f.diagram.component_count();
    CHECK(a.beta >= 0);
    CHECK(a.beta <= m - 1);
    CHECK(a.delta.is_zero() == (a.beta > 0));
    CHECK_FALSE(a.delta_tor.is_zero());
    if (!a.delta.is_zero()) CHECK(associate(a.delta, involute(a.delta)));
    CHECK(associate(a.delta_tor, involute(a.delta_tor)));
    if (a.beta == 0) CHECK(associate(a.delta, a.delta_tor));
  }
}

TEST_CASE("deleted-column consistency on the corpus") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto j = fox_jacobian(f.diagram);
    const std::size_t vars = j.vars;
    std::vector<std::size_t> first(vars, j.cols());
    for (std::size_t c = j.cols(); c-- > 0;) first[j.column_component[c]] = c;
    for (std::size_t a = 0; a < vars; ++a)
      for (std::size_t b = a + 1; b < vars; ++b) {
        if (first[a] == j.cols() || first[b] == j.cols()) continue;
        const auto one = LaurentPoly::constant(vars, 1);
        const auto lhs = deleted_column_gcd(j, first[a]) * (LaurentPoly::variable(vars, b) - one);
        const auto rhs = deleted_column_gcd(j, first[b]) * (LaurentPoly::variable(vars, a) - one);
        CHECK(associate(lhs, rhs));
      }
  }
}

TEST_CASE("invariants do not depend on the diagram") {
  for (auto [a, b] : {std::pair{"hopf_positive", "hopf_positive_4"}, std::pair{"trefoil", "trefoil_stabilized"},
                      std::pair{"unknot", "unknot_kink"}}) {
    CAPTURE(a);
    const auto x = alexander_data(fixture(a).diagram);
    const auto y = alexander_data(fixture(b).diagram);
    CHECK(x.beta == y.beta);
    CHECK(associate(x.delta, y.delta));
    CHECK(associate(x.delta_tor, y.delta_tor));
    CHECK(conway_polynomial(fixture(a).diagram) == conway_polynomial(fixture(b).diagram));
  }
}

TEST_CASE("known Alexander polynomials") {
  CHECK(associate(alexander_data(fixture("trefoil").diagram).delta, P("t^2 - t + 1", 1)));
  CHECK(associate(alexander_data(fixture("hopf_positive").diagram).delta, P("1", 2)));
  CHECK(associate(alexander_data(fixture("whitehead").diagram).delta, P("(t1 - 1)*(t2 - 1)", 2)));
  CHECK(associate(alexander_data(fixture("L4a1").diagram).delta, P("t1*t2 + 1", 2)));
  CHECK(associate(alexander_data(fixture("L_T").diagram).delta, P("(t1 - 1)*(t2 - 1)*(t1^2 - t1 + 1)", 2)));
  const auto unlink = alexander_data(fixture("unlink3").diagram);
  CHECK(unlink.beta == 2);
  CHECK(unlink.delta.is_zero());
  CHECK(associate(unlink.delta_tor, P("1", 3)));
}

TEST_CASE("split unions multiply torsion polynomials") {
  const auto a = alexander_data(fixture("trefoil_trefoil").diagram);
  CHECK(a.beta == 1);
  CHECK(associate(a.delta_tor, P("(t1^2 - t1 + 1)*(t2^2 - t2 + 1)", 2)));
  const auto comps = component_polynomials(fixture("trefoil_trefoil").diagram);
  REQUIRE(comps.size() == 2);
  CHECK(associate(comps[0], P("t1^2 - t1 + 1", 2)));
  CHECK(associate(comps[1], P("t2^2 - t2 + 1", 2)));
}

TEST_CASE("Conway polynomials") {
  CHECK(to_string(conway_polynomial(fixture("trefoil").diagram)) == to_string(ConwayPoly{{1, 0, 1}}));
  CHECK(conway_polynomial(fixture("hopf_positive").diagram) == ConwayPoly{{0, 1}});
  CHECK(conway_polynomial(fixture("hopf_negative").diagram) == ConwayPoly{{0, -1}});
  CHECK(conway_polynomial(fixture("whitehead").diagram) == ConwayPoly{{0, 0, 0, 1}});
  CHECK(conway_polynomial(fixture("unlink2").diagram).is_zero());
  CHECK(conway_polynomial(fixture("unknot").diagram) == ConwayPoly{{1}});
  CHECK(conway_polynomial(fixture("L12n1320").diagram) == ConwayPoly{{0, 1, 0, -6, 0, -5, 0, -1}});
  CHECK_THROWS_AS(conway_polynomial(fixture("L12n1320").diagram, 4), CrossingBudgetExceeded);
  CHECK(associate(conway_to_alexander(ConwayPoly{{1, 0, 1}}), P("t^2 - t + 1", 1)));
}

TEST_CASE("Sato-Levine invariant") {
  CHECK(sato_levine(fixture("L_T").diagram) == -1);
  const auto w = fixture("whitehead").diagram;
  CHECK(sato_levine(w) == -conway_polynomial(w).coefficient(3));
  CHECK(sato_levine(mirror(w)) == -sato_levine(w));
  CHECK_THROWS_AS(sato_levine(fixture("hopf_positive").diagram), std::invalid_argument);
  CHECK_THROWS_AS(sato_levine(fixture("L8a16").diagram), std::invalid_argument);
}

TEST_CASE("Kawauchi relation on multi-component corpus links") {
  int checked = 0;
  for (const auto& f : corpus()) {
    const auto& d = f.diagram;
    if (d.component_count() < 2 || d.crossing_count() > kDefaultConwayBudget) continue;
    CAPTURE(f.name);
    const auto a = alexander_data(d);
    const auto one = one_variable_alexander(d);
    const auto diag = evaluate(a.delta, Substitution::diagonal(a.delta.var_count()));
    CHECK(associate(diag * P("t - 1", 1), one));
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("determinants match independent spanning-tree counts") {
  // Spanning trees of the Tait graphs of the reduced alternating diagrams.
  for (auto [name, det] : {std::pair{"L8a16", 32}, std::pair{"L9a54", 48}, std::pair{"L9a1", 56},
                           std::pair{"L6a4", 16}}) {
    CAPTURE(name);
    const auto one = one_variable_alexander(fixture(name).diagram);
    const auto value = at_minus_one(one);
    CHECK(abs(value.is_zero() ? Integer(0) : value.terms().begin()->second) == det);
  }
}
