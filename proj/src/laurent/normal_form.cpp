#include <stdexcept>

#include "alexlink/laurent.hpp"

namespace alexlink {

bool UnitNormalForm::is_one() const {
  return poly_.term_count() == 1 && poly_.terms().begin()->first.is_one() &&
         poly_.terms().begin()->second == 1;
}

std::strong_ordering UnitNormalForm::operator<=>(const UnitNormalForm& other) const {
  if (auto c = poly_.var_count() <=> other.poly_.var_count(); c != 0) return c;
  auto a = poly_.terms().begin();
  auto b = other.poly_.terms().begin();
  const auto a_end = poly_.terms().end();
  const auto b_end = other.poly_.terms().end();
  for (; a != a_end && b != b_end; ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    const int s = cmp(a->second, b->second);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a == a_end && b == b_end) return std::strong_ordering::equal;
  return a == a_end ? std::strong_ordering::less : std::strong_ordering::greater;
}

UnitNormalForm normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("normal form of the zero polynomial");
  LaurentPoly q = p.shifted(p.min_exponents().inverse());
  if (q.leading_term().second < 0) q = -q;
  return UnitNormalForm(std::move(q));
}

namespace {

bool vanishes_at_one(const LaurentPoly& p, std::size_t var) {
  return evaluate(p, Substitution::at_one(p.var_count(), var)).is_zero();
}

LaurentPoly one_minus(std::size_t vars, std::size_t var) {
  return LaurentPoly::constant(vars, 1) - LaurentPoly::variable(vars, var);
}

}  // namespace

LaurentPoly NegligibleDecomposition::recombine() const {
  const std::size_t vars = core.poly().var_count();
  LaurentPoly out = LaurentPoly::monomial(monomial_part, sign);
  for (std::size_t i = 0; i < one_minus_t.size(); ++i)
    if (one_minus_t[i] > 0) out *= one_minus(vars, i).pow(static_cast<unsigned>(one_minus_t[i]));
  return out * core.poly();
}

NegligibleDecomposition negligible_decompose(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("negligible decomposition of zero");
  const std::size_t vars = p.var_count();
  std::vector<int> powers(vars, 0);
  LaurentPoly rest = p;
  LaurentPoly stripped = LaurentPoly::constant(vars, 1);
  for (std::size_t i = 0; i < vars; ++i) {
    const LaurentPoly factor = one_minus(vars, i);
    while (vanishes_at_one(rest, i)) {
      rest = *divide_exact(rest, factor);
      stripped *= factor;
      ++powers[i];
    }
  }
  UnitNormalForm core = normalize_unit(rest);
  // What is left over after removing every non-unit part is ±t^k.
  const LaurentPoly unit = *divide_exact(p, stripped * core.poly());
  const auto& [mono, coef] = unit.leading_term();
  return NegligibleDecomposition{std::move(core), mono, coef > 0 ? 1 : -1, std::move(powers)};
}

bool is_negligible(const LaurentPoly& p) { return negligible_decompose(p).is_negligible(); }

}  // namespace alexlink
