// Module invariants of a link diagram: beta, Alexander polynomials, Conway
// polynomial.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexlink/diagram.hpp"
#include "alexlink/laurent.hpp"

namespace alexlink {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Result of pivoting on unit entries: I_k(original) = I_{k - pivots}(rest)
/// for every k, where I_k is the ideal of k x k minors.
struct UnitReduction {
  PolyMatrix rest;
  int pivots = 0;
};

UnitReduction eliminate_units(PolyMatrix m);
/// Fraction-free (Bareiss) determinant. Precondition: square.
LaurentPoly determinant(PolyMatrix m, std::size_t vars);
/// Rank over the fraction field by fraction-free elimination.
int exact_rank(PolyMatrix m, std::size_t vars);
/// Rank after evaluating at a random point modulo a 61-bit prime; never
/// exceeds the true rank.
int randomized_rank(const PolyMatrix& m, std::uint64_t seed);
/// gcd of the k x k minors in unit normal form; 1 for k <= 0, 0 when all
/// vanish.
LaurentPoly minors_gcd(const PolyMatrix& m, std::size_t vars, int k);

/// Rank of the Alexander module: generators - rank - 1.
int rank_beta(const FoxJacobian& j);
/// gcd of the maximal minors after deleting one column.
LaurentPoly deleted_column_gcd(const FoxJacobian& j, std::size_t column);
/// Unit normal form; 0 when beta > 0.
LaurentPoly alexander_multivariable(const FoxJacobian& j);
/// gcd of the r x r minors with r the rank; never 0.
LaurentPoly torsion_alexander(const FoxJacobian& j);

struct AlexanderData {
  int beta = 0;
  LaurentPoly delta;
  LaurentPoly delta_tor;
};

AlexanderData alexander_data(const LinkDiagram& d);

/// Delta of each component knot in its own variable t_{i+1} of an
/// m-variable ring, in unit normal form. Free loops give 1.
std::vector<LaurentPoly> component_polynomials(const LinkDiagram& d);

class CrossingBudgetExceeded : public std::runtime_error {
 public:
  CrossingBudgetExceeded(int crossings, int budget);
};

inline constexpr int kDefaultConwayBudget = 16;

/// Polynomial in z, coefficients from z^0 up, no trailing zeros.
struct ConwayPoly {
  std::vector<Integer> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Integer coefficient(int k) const;
  bool operator==(const ConwayPoly&) const = default;
};

std::string to_string(const ConwayPoly& c);

/// Skein recursion on descending diagrams. Throws CrossingBudgetExceeded
/// when the reduced diagram has more than `budget` crossings.
ConwayPoly conway_polynomial(const LinkDiagram& d, int budget = kDefaultConwayBudget);
/// z = t^(1/2) - t^(-1/2), cleared to a one-variable polynomial in unit
/// normal form; 0 for the zero polynomial.
LaurentPoly conway_to_alexander(const ConwayPoly& c);
LaurentPoly one_variable_alexander(const LinkDiagram& d, int budget = kDefaultConwayBudget);
/// Minus the z^3 coefficient. Throws std::invalid_argument unless d has two
/// components with linking number 0.
Integer sato_levine(const LinkDiagram& d, int budget = kDefaultConwayBudget);

}  // namespace alexlink
