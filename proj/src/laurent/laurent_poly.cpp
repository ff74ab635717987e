#include <algorithm>
#include <limits>
#include <stdexcept>

#include "alexlink/laurent.hpp"

namespace alexlink {

LaurentPoly::LaurentPoly(std::size_t vars) : vars_(vars) {
  if (vars == 0) throw std::invalid_argument("Laurent ring needs at least one variable");
}

LaurentPoly LaurentPoly::constant(std::size_t vars, const Integer& c) {
  LaurentPoly p(vars);
  p.add_term(Monomial(vars), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw std::out_of_range("variable index out of range");
  Monomial m(vars);
  m[index] = 1;
  return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != vars_) throw VariableCountMismatch(vars_, m.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

const LaurentPoly::TermMap::value_type& LaurentPoly::trailing_term() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return *terms_.begin();
}

Monomial LaurentPoly::min_exponents() const {
  Monomial out(vars_);
  if (terms_.empty()) return out;
  for (std::size_t i = 0; i < vars_; ++i) out[i] = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < vars_; ++i) out[i] = std::min(out[i], m[i]);
  return out;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial out(vars_);
  if (terms_.empty()) return out;
  for (std::size_t i = 0; i < vars_; ++i) out[i] = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < vars_; ++i) out[i] = std::max(out[i], m[i]);
  return out;
}

int LaurentPoly::degree_in(std::size_t var) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? 0 : d;
}

int LaurentPoly::min_degree_in(std::size_t var) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
  return terms_.empty() ? 0 : d;
}

bool LaurentPoly::involves(std::size_t var) const {
  return !terms_.empty() && degree_in(var) != min_degree_in(var);
}

std::vector<std::size_t> LaurentPoly::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_; ++i)
    if (involves(i)) out.push_back(i);
  return out;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::shifted(const Monomial& by) const {
  if (by.size() != vars_) throw VariableCountMismatch(vars_, by.size());
  LaurentPoly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * by, c);
  return out;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  LaurentPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::divided_by_integer(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  LaurentPoly out(vars_);
  for (const auto& [m, coef] : terms_) {
    if (!mpz_divisible_p(coef.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("integer division is not exact");
    Integer q;
    mpz_divexact(q.get_mpz_t(), coef.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace_hint(out.terms_.end(), m, q);
  }
  return out;
}

void LaurentPoly::check_ring(const LaurentPoly& other) const {
  if (other.vars_ != vars_) throw VariableCountMismatch(vars_, other.vars_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  LaurentPoly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

LaurentPoly involute(const LaurentPoly& p) {
  LaurentPoly out(p.var_count());
  for (const auto& [m, c] : p.terms()) out.add_term(m.inverse(), c);
  return out;
}

Substitution Substitution::diagonal(std::size_t source_vars) {
  return Substitution{1, std::vector<Monomial>(source_vars, Monomial{1})};
}

Substitution Substitution::kronecker(std::span<const int> degrees) {
  Substitution s{1, {}};
  for (int d : degrees) s.images.push_back(Monomial{d});
  return s;
}

Substitution Substitution::at_one(std::size_t vars, std::size_t var) {
  Substitution s{vars, {}};
  for (std::size_t i = 0; i < vars; ++i) {
    Monomial m(vars);
    if (i != var) m[i] = 1;
    s.images.push_back(m);
  }
  return s;
}

Substitution Substitution::embed_univariate(std::size_t vars, std::size_t var) {
  Monomial m(vars);
  m[var] = 1;
  return Substitution{vars, {m}};
}

LaurentPoly evaluate(const LaurentPoly& p, const Substitution& sub) {
  if (sub.images.size() != p.var_count())
    throw VariableCountMismatch(p.var_count(), sub.images.size());
  LaurentPoly out(sub.target_vars);
  for (const auto& [m, c] : p.terms()) {
    Monomial image(sub.target_vars);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const Monomial& v = sub.images[i];
      for (std::size_t j = 0; j < sub.target_vars; ++j) image[j] += m[i] * v[j];
    }
    out.add_term(image, c);
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.var_count() != b.var_count()) throw VariableCountMismatch(a.var_count(), b.var_count());
  const std::size_t vars = a.var_count();
  if (a.is_zero()) return LaurentPoly(vars);

  // Both shifted to honest polynomials with no monomial factor; the quotient
  // is then an honest polynomial as well.
  const Monomial a_shift = a.min_exponents();
  const Monomial b_shift = b.min_exponents();
  LaurentPoly remainder = a.shifted(a_shift.inverse());
  const LaurentPoly divisor = b.shifted(b_shift.inverse());
  const auto& [lead_m, lead_c] = divisor.leading_term();

  LaurentPoly quotient(vars);
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    Monomial qm = rm * lead_m.inverse();
    for (std::size_t i = 0; i < vars; ++i)
      if (qm[i] < 0) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    quotient.add_term(qm, qc);
    LaurentPoly step = divisor.shifted(qm);
    step *= qc;
    remainder -= step;
  }
  return quotient.shifted(a_shift * b_shift.inverse());
}

}  // namespace alexlink
