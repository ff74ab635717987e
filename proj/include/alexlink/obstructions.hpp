// Lower bounds for unlinking, splitting and weak splitting numbers, and
// Gordian-distance and knot-type constraints derived from Alexander modules.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alexlink/diagram.hpp"
#include "alexlink/factor.hpp"
#include "alexlink/invariants.hpp"

namespace alexlink {

enum class Quantity { unlinking, splitting, weak_splitting };

inline constexpr Quantity kAllQuantities[] = {Quantity::unlinking, Quantity::splitting, Quantity::weak_splitting};

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

/// Rule identifiers carried in Bound::reasons.
namespace reason {
inline constexpr std::string_view rank = "rank_bound";
inline constexpr std::string_view norm = "norm_obstruction";
inline constexpr std::string_view component_norm = "component_norm_obstruction";
inline constexpr std::string_view univariate_norm = "univariate_norm_obstruction";
inline constexpr std::string_view parity = "linking_parity";
}  // namespace reason

struct Bound {
  int lower = 0;
  /// Exactly the rules that contributed, in order of application.
  std::vector<std::string> reasons;
  /// Norm test behind the raise to m, when one was run.
  std::optional<NormVerdict> norm;
};

/// m - 1 - beta, raised to m when Delta != 0 is not a norm up to negligible
/// factors.
Bound unlinking_bound(const AlexanderData& a, int m);
/// As above, testing Delta / prod Delta_{L_i}(t_i). component_polys[i] lives
/// in variable t_{i+1} of the same ring as Delta.
Bound splitting_bound(const AlexanderData& a, std::span<const LaurentPoly> component_polys, int m);
/// As above, discarding factors in fewer than two variables.
Bound weak_splitting_bound(const AlexanderData& a, int m);

/// Smallest value >= bound with the parity of the total linking number.
int parity_refine(int bound, const LinkDiagram& d);
/// Applies parity_refine to a splitting bound, recording the rule when it
/// raises the value.
Bound parity_refine(Bound b, const LinkDiagram& d);

/// |beta(L) - beta(J)|. Throws std::invalid_argument when the Alexander
/// data live in rings with different variable counts.
int gordian_rank_bound(const AlexanderData& l, const AlexanderData& j);

struct DivisibilityVerdict {
  bool compatible = false;
  /// Delta_tor(L) / Delta_tor(J) when exact.
  std::optional<LaurentPoly> quotient;
  std::optional<NormVerdict> norm;
};

/// Tests whether g(L, J) = beta(J) - beta(L) is possible: the quotient of
/// torsion polynomials must exist and be a norm up to negligible factors.
/// Throws std::invalid_argument when beta(J) < beta(L).
DivisibilityVerdict gordian_extremal_divisibility(const AlexanderData& l, const AlexanderData& j);

/// Whether two splitting sequences of length m - 1 ending in split links with
/// component polynomial products product_a and product_b can coexist. Throws
/// std::invalid_argument when Delta(L) = 0.
NormVerdict splitting_sequence_knot_constraint(const AlexanderData& a, const LaurentPoly& product_a,
                                               const LaurentPoly& product_b);

struct KnotComplexity {
  int min_alexander_degree = 0;
  int min_crossings = 0;
};

/// Lower bounds on a knot K forced to have delta_j | Delta_K because delta_j
/// (one variable) divides delta_l in t1 to odd multiplicity. Throws
/// std::invalid_argument when delta_j is reducible, negligible, not
/// symmetric, or its multiplicity is even.
KnotComplexity forced_knot_complexity(const LaurentPoly& delta_l, const LaurentPoly& delta_j);

struct BandClaspVerdict {
  bool holds = false;
  /// g with Delta_L ≐ Delta_K(t) Delta_J(s) g ḡ, up to ±monomials only.
  std::optional<LaurentPoly> g;
  bool trivial = false;
  std::vector<UnitNormalForm> blocking;
};

/// delta_l in (s, t) = (t1, t2); delta_k and delta_j are one-variable
/// polynomials placed in t and s respectively.
BandClaspVerdict band_clasping_check(const LaurentPoly& delta_l, const LaurentPoly& delta_k,
                                     const LaurentPoly& delta_j);

struct ObstructionReport {
  std::string link_name;
  int m = 0;
  AlexanderData alexander;
  std::vector<LaurentPoly> component_polys;
  std::map<Quantity, Bound> bounds;
  /// Total linking number mod 2.
  int parity = 0;
};

ObstructionReport obstruct(const LinkDiagram& d, std::string link_name);

}  // namespace alexlink
