#include "alexlink/obstructions.hpp"

#include <cstdlib>
#include <stdexcept>

namespace alexlink {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::unlinking:
      return "unlinking";
    case Quantity::splitting:
      return "splitting";
    case Quantity::weak_splitting:
      return "weak_splitting";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (Quantity q : kAllQuantities)
    if (to_string(q) == name) return q;
  return std::nullopt;
}

namespace {

Bound rank_only(const AlexanderData& a, int m) {
  Bound b;
  b.lower = m - 1 - a.beta;
  b.reasons.emplace_back(reason::rank);
  return b;
}

void raise_unless_norm(Bound& b, int m, NormVerdict verdict, std::string_view rule) {
  if (!verdict.is_norm) {
    b.lower = m;
    b.reasons.emplace_back(rule);
  }
  b.norm = std::move(verdict);
}

}  // namespace

Bound unlinking_bound(const AlexanderData& a, int m) {
  Bound b = rank_only(a, m);
  if (!a.delta.is_zero()) raise_unless_norm(b, m, is_norm_up_to_negligible(a.delta), reason::norm);
  return b;
}

Bound splitting_bound(const AlexanderData& a, std::span<const LaurentPoly> component_polys, int m) {
  Bound b = rank_only(a, m);
  if (a.delta.is_zero()) return b;
  LaurentPoly product = LaurentPoly::constant(a.delta.var_count(), 1);
  for (const auto& p : component_polys) product *= p;
  if (auto q = divide_exact(a.delta, product)) {
    raise_unless_norm(b, m, is_norm_up_to_negligible(*q), reason::component_norm);
  } else {
    b.lower = m;
    b.reasons.emplace_back(reason::component_norm);
  }
  return b;
}

Bound weak_splitting_bound(const AlexanderData& a, int m) {
  Bound b = rank_only(a, m);
  if (!a.delta.is_zero()) raise_unless_norm(b, m, is_norm_modulo_univariate(a.delta), reason::univariate_norm);
  return b;
}

int parity_refine(int bound, const LinkDiagram& d) {
  const int parity = std::abs(total_linking_number(d)) % 2;
  return std::abs(bound) % 2 == parity ? bound : bound + 1;
}

Bound parity_refine(Bound b, const LinkDiagram& d) {
  const int refined = parity_refine(b.lower, d);
  if (refined != b.lower) {
    b.lower = refined;
    b.reasons.emplace_back(reason::parity);
  }
  return b;
}

int gordian_rank_bound(const AlexanderData& l, const AlexanderData& j) {
  if (l.delta_tor.var_count() != j.delta_tor.var_count())
    throw std::invalid_argument("Gordian distance needs links with the same number of components");
  return std::abs(l.beta - j.beta);
}

DivisibilityVerdict gordian_extremal_divisibility(const AlexanderData& l, const AlexanderData& j) {
  gordian_rank_bound(l, j);
  if (j.beta < l.beta) throw std::invalid_argument("extremal case needs beta(J) >= beta(L)");
  DivisibilityVerdict v;
  v.quotient = divide_exact(l.delta_tor, j.delta_tor);
  if (!v.quotient) return v;
  v.norm = is_norm_up_to_negligible(*v.quotient);
  v.compatible = v.norm->is_norm;
  return v;
}

NormVerdict splitting_sequence_knot_constraint(const AlexanderData& a, const LaurentPoly& product_a,
                                               const LaurentPoly& product_b) {
  if (a.delta.is_zero()) throw std::invalid_argument("knot-type constraint needs a nonzero Alexander polynomial");
  return norm_equivalent(product_a, product_b);
}

KnotComplexity forced_knot_complexity(const LaurentPoly& delta_l, const LaurentPoly& delta_j) {
  if (delta_j.var_count() != 1) throw std::invalid_argument("knot polynomial must be in one variable");
  const LaurentPoly embedded = evaluate(delta_j, Substitution::embed_univariate(delta_l.var_count(), 0));
  const OddMultiplicity odd = odd_multiplicity_divisor(delta_l, embedded);
  if (odd.multiplicity == 0) throw std::invalid_argument("knot polynomial does not divide the link polynomial");
  if (!odd.forced_divides) throw std::invalid_argument("even multiplicity forces nothing");
  KnotComplexity out;
  out.min_alexander_degree = delta_j.degree_in(0) - delta_j.min_degree_in(0);
  out.min_crossings = out.min_alexander_degree + 1;
  return out;
}

BandClaspVerdict band_clasping_check(const LaurentPoly& delta_l, const LaurentPoly& delta_k,
                                     const LaurentPoly& delta_j) {
  if (delta_l.is_zero()) throw std::invalid_argument("band-clasping check needs a nonzero polynomial");
  if (delta_l.var_count() != 2 || delta_k.var_count() != 1 || delta_j.var_count() != 1)
    throw std::invalid_argument("band-clasping check works in two variables with one-variable knot polynomials");
  const LaurentPoly k = evaluate(delta_k, Substitution::embed_univariate(2, 1));
  const LaurentPoly j = evaluate(delta_j, Substitution::embed_univariate(2, 0));
  BandClaspVerdict v;
  auto q = divide_exact(delta_l, k * j);
  if (!q) {
    v.blocking.push_back(normalize_unit(delta_l));
    return v;
  }
  NormVerdict norm = is_norm_up_to_unit(*q);
  v.holds = norm.is_norm;
  v.blocking = std::move(norm.blocking);
  if (norm.witness) {
    v.g = normalize_unit(*norm.witness).poly();
    v.trivial = v.g->is_unit();
  }
  return v;
}

ObstructionReport obstruct(const LinkDiagram& d, std::string link_name) {
  ObstructionReport r;
  r.link_name = std::move(link_name);
  r.m = d.component_count();
  r.alexander = alexander_data(d);
  r.component_polys = component_polynomials(d);
  r.parity = std::abs(total_linking_number(d)) % 2;
  r.bounds[Quantity::unlinking] = unlinking_bound(r.alexander, r.m);
  r.bounds[Quantity::splitting] = parity_refine(splitting_bound(r.alexander, r.component_polys, r.m), d);
  r.bounds[Quantity::weak_splitting] = weak_splitting_bound(r.alexander, r.m);
  return r;
}

}  // namespace alexlink
