// Multivariate gcd. A Kronecker image gcd is tried first and accepted when its
// preimage divides both inputs; otherwise recursive content extraction with a
// primitive pseudo-remainder sequence.
#include "factor/gcd.hpp"

#include <stdexcept>

#include "alexlink/factor.hpp"
#include "factor/kronecker.hpp"
#include "factor/upoly.hpp"

namespace alexlink {

namespace detail {

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(p.min_exponents().inverse());
}

LaurentPoly coefficient_in(const LaurentPoly& p, std::size_t var, int k) {
  LaurentPoly out(p.var_count());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != k) continue;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

namespace {

Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<std::size_t> joint_variables(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a.var_count(); ++v)
    if (a.involves(v) || b.involves(v)) out.push_back(v);
  return out;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

bool minimal_exponents_zero(const LaurentPoly& p) { return p.min_exponents().is_one(); }

// a, b stripped and primitive over Z.
std::optional<LaurentPoly> kronecker_gcd(const LaurentPoly& a, const LaurentPoly& b,
                                         const std::vector<std::size_t>& vars) {
  const Kronecker k = Kronecker::covering(vars, {&a, &b});
  const ZPoly g = gcd(k.image(a), k.image(b));
  std::size_t y_power = 0;
  while (g[y_power] == 0) ++y_power;
  for (std::size_t j = 0; j <= y_power; ++j) {
    ZPoly shifted(g.begin() + static_cast<std::ptrdiff_t>(y_power - j), g.end());
    LaurentPoly candidate = k.preimage(shifted);
    if (candidate.is_zero() || !minimal_exponents_zero(candidate)) continue;
    if (divide_exact(a, candidate) && divide_exact(b, candidate)) return candidate;
  }
  return std::nullopt;
}

// a * lc(b)^k reduced by b in var.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const LaurentPoly lb = coefficient_in(b, var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    Monomial shift(a.var_count());
    shift[var] = da - db;
    const LaurentPoly la = coefficient_in(a, var, da);
    a = a * lb - (b * la).shifted(shift);
  }
  return a;
}

LaurentPoly prs_gcd(LaurentPoly a, LaurentPoly b, std::size_t x) {
  const LaurentPoly ca = content_in(a, x);
  const LaurentPoly cb = content_in(b, x);
  const LaurentPoly c = poly_gcd(ca, cb);
  a = exact(a, ca);
  b = exact(b, cb);
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  for (;;) {
    LaurentPoly r = pseudo_remainder(a, b, x);
    if (r.is_zero()) return c * b;
    r = strip_monomial(r);
    if (!r.involves(x)) return c;
    a = std::move(b);
    b = exact(r, content_in(r, x));
  }
}

}  // namespace

LaurentPoly content_in(const LaurentPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  if (p.variables() == std::vector<std::size_t>{var})
    return LaurentPoly::constant(p.var_count(), p.content());
  LaurentPoly g(p.var_count());
  const int lo = p.min_degree_in(var);
  const int hi = p.degree_in(var);
  for (int k = lo; k <= hi; ++k) {
    const LaurentPoly c = coefficient_in(p, var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? strip_monomial(c) : poly_gcd(g, c);
    if (g.is_unit()) break;
  }
  if (g.leading_term().second < 0) g = -g;
  return g;
}

LaurentPoly poly_gcd(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  if (a_in.is_zero()) return strip_monomial(b_in);
  if (b_in.is_zero()) return strip_monomial(a_in);
  const std::size_t vars = a_in.var_count();
  const Integer c = integer_gcd(a_in.content(), b_in.content());
  const LaurentPoly a = strip_monomial(a_in).divided_by_integer(a_in.content());
  const LaurentPoly b = strip_monomial(b_in).divided_by_integer(b_in.content());
  const auto joint = joint_variables(a, b);
  if (joint.empty()) return LaurentPoly::constant(vars, c);
  if (joint.size() == 1) return sparse_in(gcd(dense_in(a, joint[0]), dense_in(b, joint[0])), vars, joint[0]) * c;

  for (std::size_t v : joint) {
    if (!a.involves(v)) return poly_gcd(a, content_in(b, v)) * c;
    if (!b.involves(v)) return poly_gcd(content_in(a, v), b) * c;
  }
  if (auto g = kronecker_gcd(a, b, joint)) return *g * c;
  std::vector<std::size_t> reversed(joint.rbegin(), joint.rend());
  if (auto g = kronecker_gcd(a, b, reversed)) return *g * c;
  return prs_gcd(a, b, joint.front()) * c;
}

}  // namespace detail

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  return normalize_unit(detail::poly_gcd(a, b)).poly();
}

}  // namespace alexlink
