// Factorization over Z[t1^±1, ..., tm^±1]: integer content by prime
// factorization, contents with respect to a main variable recursively, the
// square-free part through Kronecker substitution and univariate Zassenhaus,
// multiplicities by repeated division.
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "alexlink/factor.hpp"
#include "factor/gcd.hpp"
#include "factor/integer_factor.hpp"
#include "factor/kronecker.hpp"
#include "factor/upoly.hpp"

namespace alexlink {

namespace {

using detail::ZPoly;
using FactorMap = std::map<UnitNormalForm, int>;

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("factorization: expected exact division");
  return *q;
}

using detail::Kronecker;

LaurentPoly from_univariate(const ZPoly& u, std::size_t vars, std::size_t var) {
  return detail::sparse_in(u, vars, var);
}

ZPoly to_univariate(const LaurentPoly& p, std::size_t var) { return detail::dense_in(p, var); }

void factor_primitive(const LaurentPoly& q, FactorMap& out);

// Irreducible factors, with multiplicity, of a primitive one-variable
// polynomial given densely; the y^k part is returned separately.
std::vector<ZPoly> univariate_factor_list(const ZPoly& u, int& y_power) {
  y_power = 0;
  while (u[static_cast<std::size_t>(y_power)] == 0) ++y_power;
  LaurentPoly p = from_univariate(u, 1, 0);
  FactorMap fm;
  factor_primitive(detail::strip_monomial(p), fm);
  std::vector<ZPoly> list;
  for (const auto& [f, mult] : fm)
    for (int i = 0; i < mult; ++i) list.push_back(to_univariate(f.poly(), 0));
  return list;
}

bool minimal_exponents_zero(const LaurentPoly& p) {
  const Monomial lo = p.min_exponents();
  return lo.is_one();
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Square-free S involving at least two variables.
std::vector<LaurentPoly> factor_by_kronecker(const LaurentPoly& s) {
  const std::vector<std::size_t> involved = s.variables();
  std::vector<std::size_t> order = involved;
  std::sort(order.begin(), order.end());

  Kronecker best_map;
  std::vector<ZPoly> best_list;
  int best_y = 0;
  bool have = false;
  int tried = 0;
  do {
    const Kronecker k = Kronecker::covering(order, {&s});
    int y = 0;
    auto list = univariate_factor_list(k.image(s), y);
    if (!have || list.size() < best_list.size()) {
      best_map = k;
      best_list = std::move(list);
      best_y = y;
      have = true;
    }
    ++tried;
  } while (best_list.size() > 8 && tried < 6 && std::next_permutation(order.begin(), order.end()));

  std::vector<LaurentPoly> found;
  LaurentPoly remaining = s;
  std::vector<ZPoly> pool = std::move(best_list);
  int y_budget = best_y;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly product{1};
      for (std::size_t i : idx) product = detail::mul(product, pool[i]);
      for (int j = 0; j <= y_budget && !progress; ++j) {
        ZPoly shifted(static_cast<std::size_t>(j), Integer(0));
        shifted.insert(shifted.end(), product.begin(), product.end());
        LaurentPoly candidate = best_map.preimage(shifted);
        if (candidate.is_zero() || !minimal_exponents_zero(candidate)) continue;
        auto quotient = divide_exact(remaining, candidate);
        if (!quotient) continue;
        found.push_back(candidate);
        remaining = *quotient;
        y_budget -= j;
        progress = true;
      }
      if (progress) {
        for (std::size_t i = idx.size(); i-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!progress) ++size;
  }
  if (!remaining.is_constant()) found.push_back(remaining);
  return found;
}

// Irreducible factors of a square-free primitive polynomial.
std::vector<LaurentPoly> factor_squarefree(const LaurentPoly& s) {
  const auto vars = s.variables();
  if (vars.empty()) return {};
  if (vars.size() == 1) {
    const ZPoly u = detail::primitive_part(to_univariate(s, vars.front()));
    std::vector<LaurentPoly> out;
    for (const auto& f : factor_univariate_squarefree(u)) out.push_back(from_univariate(f, s.var_count(), vars.front()));
    return out;
  }
  return factor_by_kronecker(s);
}

// q: polynomial with all minimal exponents 0 and integer content 1.
void factor_primitive(const LaurentPoly& q, FactorMap& out) {
  const auto vars = q.variables();
  if (vars.empty()) return;
  std::size_t x = vars.front();
  for (std::size_t v : vars)
    if (q.degree_in(v) < q.degree_in(x)) x = v;

  const LaurentPoly c = detail::content_in(q, x);
  if (!c.is_constant()) factor_primitive(detail::strip_monomial(c), out);
  LaurentPoly rest = exact(q, c);

  // A square-free Kronecker image certifies that rest is square-free.
  const Kronecker k = Kronecker::covering(vars, {&rest});
  const ZPoly image = k.image(rest);
  const bool certified = detail::degree(detail::gcd(image, detail::derivative(image))) == 0;
  const LaurentPoly squarefree = certified ? rest : exact(rest, detail::poly_gcd(rest, rest.derivative(x)));
  for (const LaurentPoly& f : factor_squarefree(squarefree)) {
    int mult = 0;
    for (;;) {
      auto next = divide_exact(rest, f);
      if (!next) break;
      rest = std::move(*next);
      ++mult;
    }
    if (mult == 0) throw std::logic_error("factorization: factor does not divide");
    out[normalize_unit(f)] += mult;
  }
}

}  // namespace

LaurentPoly Factorization::expand() const {
  LaurentPoly out = LaurentPoly::monomial(monomial, sign);
  for (const auto& f : factors) out *= f.poly.poly().pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

int Factorization::multiplicity_of(const UnitNormalForm& q) const {
  for (const auto& f : factors)
    if (f.poly == q) return f.multiplicity;
  return 0;
}

Factorization factor_irreducible(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  const std::size_t vars = p.var_count();
  FactorMap found;
  const Integer content = p.content();
  for (const auto& [prime, mult] : detail::factor_integer(content))
    found[normalize_unit(LaurentPoly::constant(vars, prime))] += mult;
  factor_primitive(detail::strip_monomial(p.divided_by_integer(content)), found);

  Factorization out;
  LaurentPoly product = LaurentPoly::constant(vars, 1);
  for (const auto& [f, mult] : found) {
    out.factors.push_back(Factor{f, mult});
    product *= f.poly().pow(static_cast<unsigned>(mult));
  }
  const LaurentPoly unit = exact(p, product);
  if (!unit.is_unit()) throw std::logic_error("factorization: cofactor is not a unit");
  out.monomial = unit.leading_term().first;
  out.sign = unit.leading_term().second > 0 ? 1 : -1;
  return out;
}

}  // namespace alexlink
