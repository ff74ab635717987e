#include <functional>
#include <stdexcept>

#include "alexlink/factor.hpp"

namespace alexlink {

namespace {

using SignedMultiset = std::map<UnitNormalForm, int>;
using Keep = std::function<bool(const UnitNormalForm&)>;

SignedMultiset multiset_of(const LaurentPoly& p, int weight, SignedMultiset acc = {}) {
  for (const auto& f : factor_irreducible(p).factors) acc[f.poly] += weight * f.multiplicity;
  return acc;
}

UnitNormalForm conjugate(const UnitNormalForm& q) { return normalize_unit(involute(q.poly())); }

// Every kept class q must satisfy d(q) even when q ≐ q̄, d(q) = d(q̄)
// otherwise. Positive parts build the witness, negative parts the co-witness.
NormVerdict pair_off(const SignedMultiset& d, const Keep& keep, std::size_t vars) {
  NormVerdict v;
  LaurentPoly f = LaurentPoly::constant(vars, 1);
  LaurentPoly g = LaurentPoly::constant(vars, 1);
  auto absorb = [&](const UnitNormalForm& q, int power) {
    if (power > 0) f *= q.poly().pow(static_cast<unsigned>(power));
    if (power < 0) g *= q.poly().pow(static_cast<unsigned>(-power));
  };
  for (const auto& [q, mult] : d) {
    if (mult == 0 || !keep(q)) continue;
    const UnitNormalForm qbar = conjugate(q);
    if (qbar == q) {
      if (mult % 2 != 0)
        v.blocking.push_back(q);
      else
        absorb(q, mult / 2);
      continue;
    }
    auto it = d.find(qbar);
    const int mult_bar = it == d.end() ? 0 : it->second;
    if (mult_bar != 0 && qbar < q) continue;  // pair handled at qbar
    if (mult != mult_bar) {
      v.blocking.push_back(q);
      if (mult_bar != 0) v.blocking.push_back(qbar);
    } else {
      absorb(q, mult);
    }
  }
  v.is_norm = v.blocking.empty();
  if (v.is_norm) {
    v.witness = std::move(f);
    v.co_witness = std::move(g);
  }
  return v;
}

void require_nonzero(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("norm test of the zero polynomial");
}

}  // namespace

bool is_self_conjugate(const UnitNormalForm& q) { return conjugate(q) == q; }

bool is_negligible_factor(const UnitNormalForm& q) {
  const LaurentPoly& p = q.poly();
  if (p.term_count() != 2) return false;
  const auto& [lo_m, lo_c] = p.trailing_term();
  const auto& [hi_m, hi_c] = p.leading_term();
  return lo_m.is_one() && lo_c == -1 && hi_c == 1 && hi_m.total_degree() == 1 &&
         p.variables().size() == 1;
}

NormVerdict is_norm_up_to_negligible(const LaurentPoly& p) {
  require_nonzero(p);
  NormVerdict v = pair_off(multiset_of(p, 1), [](const UnitNormalForm& q) { return !is_negligible_factor(q); },
                           p.var_count());
  v.co_witness.reset();
  return v;
}

NormVerdict is_norm_modulo_univariate(const LaurentPoly& p) {
  require_nonzero(p);
  NormVerdict v = pair_off(multiset_of(p, 1),
                           [](const UnitNormalForm& q) { return q.poly().variables().size() >= 2; },
                           p.var_count());
  v.co_witness.reset();
  return v;
}

NormVerdict is_norm_up_to_unit(const LaurentPoly& p) {
  require_nonzero(p);
  NormVerdict v = pair_off(multiset_of(p, 1), [](const UnitNormalForm&) { return true; }, p.var_count());
  v.co_witness.reset();
  return v;
}

NormVerdict norm_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  require_nonzero(a);
  require_nonzero(b);
  if (a.var_count() != b.var_count()) throw VariableCountMismatch(a.var_count(), b.var_count());
  return pair_off(multiset_of(b, -1, multiset_of(a, 1)),
                  [](const UnitNormalForm& q) { return !is_negligible_factor(q); }, a.var_count());
}

OddMultiplicity odd_multiplicity_divisor(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (q.is_zero() || q.var_count() != p.var_count())
    throw std::invalid_argument("divisor must be a nonzero polynomial in the same ring");
  const Factorization fq = factor_irreducible(q);
  if (fq.factors.size() != 1 || fq.factors.front().multiplicity != 1)
    throw std::invalid_argument("divisor is not irreducible");
  const UnitNormalForm& nq = fq.factors.front().poly;
  if (is_negligible_factor(nq)) throw std::invalid_argument("divisor is negligible");
  if (!is_self_conjugate(nq)) throw std::invalid_argument("divisor is not self-conjugate");
  OddMultiplicity out;
  LaurentPoly rest = p;
  while (auto next = divide_exact(rest, nq.poly())) {
    rest = std::move(*next);
    ++out.multiplicity;
  }
  out.forced_divides = out.multiplicity % 2 == 1;
  return out;
}

}  // namespace alexlink
