// Kronecker substitution t_{vars[i]} -> y^{weights[i]} with mixed-radix
// inverse; exact on polynomials whose degree in vars[i] is below bases[i].
#pragma once

#include "alexlink/laurent.hpp"
#include "factor/upoly.hpp"

namespace alexlink::detail {

struct Kronecker {
  std::vector<std::size_t> vars;
  std::vector<std::size_t> weights;
  std::vector<std::size_t> bases;
  std::size_t ring_vars = 0;

  /// Bases one above the largest degree of any of the given polynomials.
  static Kronecker covering(std::vector<std::size_t> order, std::initializer_list<const LaurentPoly*> polys);

  /// Requires nonnegative exponents.
  ZPoly image(const LaurentPoly& p) const;
  /// Zero polynomial when u has terms beyond the radix range.
  LaurentPoly preimage(const ZPoly& u) const;
};

/// Dense coefficients of a polynomial that involves at most `var`.
ZPoly dense_in(const LaurentPoly& p, std::size_t var);
LaurentPoly sparse_in(const ZPoly& u, std::size_t vars, std::size_t var);

}  // namespace alexlink::detail
