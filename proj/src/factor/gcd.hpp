#pragma once

#include "alexlink/laurent.hpp"

namespace alexlink::detail {

/// p divided by its monomial content, so all minimal exponents are 0.
LaurentPoly strip_monomial(const LaurentPoly& p);
/// Coefficient of var^k in p, as a polynomial not involving var.
LaurentPoly coefficient_in(const LaurentPoly& p, std::size_t var, int k);
/// gcd of the coefficients of p viewed as a polynomial in var.
LaurentPoly content_in(const LaurentPoly& p, std::size_t var);
/// A gcd of two nonzero polynomials, determined up to units.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace alexlink::detail
