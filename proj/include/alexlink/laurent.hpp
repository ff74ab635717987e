// Exact arithmetic in the Laurent polynomial ring Z[t1^±1, ..., tm^±1].
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alexlink {

using Integer = mpz_class;

/// Thrown when two operands live in rings with different variable counts.
class VariableCountMismatch : public std::invalid_argument {
 public:
  VariableCountMismatch(std::size_t lhs, std::size_t rhs);
};

/// Exponent vector t1^e1 ... tm^em. Exponents may be negative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t vars) : exps_(vars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<int> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  explicit LaurentPoly(std::size_t vars = 1);

  static LaurentPoly constant(std::size_t vars, const Integer& c);
  /// t_{index+1}; index is zero-based.
  static LaurentPoly variable(std::size_t vars, std::size_t index);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);

  std::size_t var_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// ±monomial, i.e. a unit of the ring.
  bool is_unit() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& c);

  /// Lexicographically greatest term. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;
  /// Lexicographically smallest term. Precondition: nonzero.
  const TermMap::value_type& trailing_term() const;

  Monomial min_exponents() const;
  Monomial max_exponents() const;
  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  std::vector<std::size_t> variables() const;
  /// Integer gcd of the coefficients (nonnegative); 0 for the zero polynomial.
  Integer content() const;

  LaurentPoly shifted(const Monomial& by) const;
  LaurentPoly derivative(std::size_t var) const;
  LaurentPoly pow(unsigned k) const;
  LaurentPoly divided_by_integer(const Integer& c) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

  bool operator==(const LaurentPoly& other) const;

 private:
  void check_ring(const LaurentPoly& other) const;

  std::size_t vars_;
  TermMap terms_;
};

/// f(t1, ..., tm) -> f(t1^-1, ..., tm^-1).
LaurentPoly involute(const LaurentPoly& p);

/// Canonical representative of the class of a nonzero polynomial under
/// multiplication by units ±t^k: every variable has minimal exponent 0 and
/// the lexicographically greatest term has a positive coefficient.
class UnitNormalForm {
 public:
  const LaurentPoly& poly() const { return poly_; }
  bool is_one() const;
  std::strong_ordering operator<=>(const UnitNormalForm& other) const;
  bool operator==(const UnitNormalForm& other) const { return poly_ == other.poly_; }

 private:
  friend UnitNormalForm normalize_unit(const LaurentPoly& p);
  explicit UnitNormalForm(LaurentPoly p) : poly_(std::move(p)) {}
  LaurentPoly poly_;
};

/// Throws std::domain_error on zero input.
UnitNormalForm normalize_unit(const LaurentPoly& p);

/// p = sign * t^monomial_part * prod (1 - t_i)^{one_minus_t[i]} * core.
struct NegligibleDecomposition {
  UnitNormalForm core;
  Monomial monomial_part;
  int sign = 1;
  std::vector<int> one_minus_t;

  LaurentPoly recombine() const;
  bool is_negligible() const { return core.is_one(); }
};

/// Throws std::domain_error on zero input.
NegligibleDecomposition negligible_decompose(const LaurentPoly& p);
bool is_negligible(const LaurentPoly& p);

/// Ring homomorphism sending t_i to a monomial of a ring with target_vars
/// variables.
struct Substitution {
  std::size_t target_vars = 1;
  std::vector<Monomial> images;

  /// t_i -> t for every i.
  static Substitution diagonal(std::size_t source_vars);
  /// t_i -> t^{degrees[i]} in one variable.
  static Substitution kronecker(std::span<const int> degrees);
  /// t_var -> 1, other variables fixed (same ring).
  static Substitution at_one(std::size_t vars, std::size_t var);
  /// Places a one-variable polynomial into variable `var` of an m-variable ring.
  static Substitution embed_univariate(std::size_t vars, std::size_t var);
};

LaurentPoly evaluate(const LaurentPoly& p, const Substitution& sub);

/// Exact quotient a / b, or nullopt when b does not divide a in the ring.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Polynomial text syntax: integers, t1..tm (or t for t1), ^ with a possibly
/// negative integer exponent, *, +, -, parentheses.
class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }
  /// The input with a caret under the offending column.
  std::string caret_diagnostic(std::string_view input) const;

 private:
  std::size_t position_;
};

/// vars == 0 infers the variable count from the highest index used (at least 1).
LaurentPoly parse_laurent(std::string_view text, std::size_t vars = 0);

std::string to_string(const LaurentPoly& p);
std::string to_string(const Monomial& m);

}  // namespace alexlink
