// GCD, irreducible factorization and norm tests over Z[t1^±1, ..., tm^±1].
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "alexlink/laurent.hpp"

namespace alexlink {

struct Factor {
  UnitNormalForm poly;
  int multiplicity = 1;
};

/// p = sign * t^monomial * prod factors[i].poly^multiplicity. Integer primes
/// appear as constant factors. Factors are distinct and sorted by normal form.
struct Factorization {
  int sign = 1;
  Monomial monomial;
  std::vector<Factor> factors;

  LaurentPoly expand() const;
  int multiplicity_of(const UnitNormalForm& q) const;
};

/// Throws std::domain_error on zero input.
Factorization factor_irreducible(const LaurentPoly& p);

/// A gcd in unit normal form. gcd(a, 0) ≐ a. Throws std::domain_error when
/// both inputs are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Irreducible factors over Z of a primitive square-free polynomial in one
/// variable with positive leading coefficient, coefficients listed from the
/// constant term up. Exposed for testing.
std::vector<std::vector<Integer>> factor_univariate_squarefree(const std::vector<Integer>& f);

/// f and its conjugate class: q̄ ≐ q.
bool is_self_conjugate(const UnitNormalForm& q);
/// Normal form t_i - 1.
bool is_negligible_factor(const UnitNormalForm& q);

struct NormVerdict {
  bool is_norm = false;
  /// Present iff is_norm. For single-input tests, p ≐ f * f̄ * n with n
  /// negligible (or n = 1 where the test forbids negligible factors).
  std::optional<LaurentPoly> witness;
  /// Only for norm_equivalent: a * g * ḡ ≐ b * f * f̄ * n, with f the witness.
  std::optional<LaurentPoly> co_witness;
  /// Present iff !is_norm: the classes left unpaired.
  std::vector<UnitNormalForm> blocking;
};

/// Pairing test on the irreducible factors after discarding negligible ones.
NormVerdict is_norm_up_to_negligible(const LaurentPoly& p);
/// As above but factors involving at most one variable are also discarded.
NormVerdict is_norm_modulo_univariate(const LaurentPoly& p);
/// Only ±t^k may be discarded; (t_i - 1) factors must pair like any other.
NormVerdict is_norm_up_to_unit(const LaurentPoly& p);
/// Pairing test on the signed difference of the factorizations of a and b.
NormVerdict norm_equivalent(const LaurentPoly& a, const LaurentPoly& b);

struct OddMultiplicity {
  int multiplicity = 0;
  bool forced_divides = false;
};

/// Multiplicity of the self-conjugate irreducible q in p. Throws
/// std::invalid_argument when q is reducible, negligible or not
/// self-conjugate.
OddMultiplicity odd_multiplicity_divisor(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace alexlink
