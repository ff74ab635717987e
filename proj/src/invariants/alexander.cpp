#include <algorithm>

#include "alexlink/invariants.hpp"

namespace alexlink {

namespace {

constexpr std::uint64_t kRankSeeds[] = {0x9e3779b97f4a7c15ULL, 0xbf58476d1ce4e5b9ULL, 0x94d049bb133111ebULL};

// Rank over the fraction field. The Fox identity caps it at cols - 1, so a
// random evaluation reaching that cap certifies it without exact elimination.
int jacobian_rank(const FoxJacobian& j) {
  if (j.cols() == 0) return 0;
  const int cap = static_cast<int>(j.cols()) - 1;
  auto red = eliminate_units(j.entries);
  int fast = 0;
  for (auto seed : kRankSeeds) fast = std::max(fast, randomized_rank(red.rest, seed));
  if (red.pivots + fast >= cap) return red.pivots + fast;
  return red.pivots + exact_rank(std::move(red.rest), j.vars);
}

LaurentPoly normalized(const LaurentPoly& p) { return p.is_zero() ? p : normalize_unit(p).poly(); }

LaurentPoly alexander_from(const FoxJacobian& j, int beta) {
  if (beta > 0) return LaurentPoly(j.vars);
  const LaurentPoly a = deleted_column_gcd(j, 0);
  if (j.vars == 1) return a;
  const LaurentPoly t = LaurentPoly::variable(j.vars, static_cast<std::size_t>(j.column_component[0])) -
                        LaurentPoly::constant(j.vars, 1);
  auto q = divide_exact(a, t);
  if (!q) throw std::logic_error("deleted-column gcd not divisible by t - 1");
  return normalized(*q);
}

}  // namespace

int rank_beta(const FoxJacobian& j) { return static_cast<int>(j.cols()) - jacobian_rank(j) - 1; }

LaurentPoly deleted_column_gcd(const FoxJacobian& j, std::size_t column) {
  if (column >= j.cols()) throw std::out_of_range("deleted_column_gcd: column out of range");
  PolyMatrix m = j.entries;
  for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(column));
  return minors_gcd(m, j.vars, static_cast<int>(j.cols()) - 1);
}

LaurentPoly alexander_multivariable(const FoxJacobian& j) { return alexander_from(j, rank_beta(j)); }

LaurentPoly torsion_alexander(const FoxJacobian& j) { return minors_gcd(j.entries, j.vars, jacobian_rank(j)); }

AlexanderData alexander_data(const LinkDiagram& d) {
  const FoxJacobian j = fox_jacobian(d);
  const int rank = jacobian_rank(j);
  AlexanderData out;
  out.beta = static_cast<int>(j.cols()) - rank - 1;
  out.delta = alexander_from(j, out.beta);
  out.delta_tor = minors_gcd(j.entries, j.vars, rank);
  return out;
}

std::vector<LaurentPoly> component_polynomials(const LinkDiagram& d) {
  const auto m = static_cast<std::size_t>(d.component_count());
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < m; ++i) {
    const LinkDiagram knot = reduce_diagram(delete_components(d, {static_cast<int>(i)}));
    const LaurentPoly k = alexander_multivariable(fox_jacobian(knot));
    out.push_back(evaluate(k, Substitution::embed_univariate(m, i)));
  }
  return out;
}

}  // namespace alexlink
