// Dense one-variable polynomials over Z, coefficients from the constant term up.
#pragma once

#include <optional>
#include <vector>

#include "alexlink/laurent.hpp"

namespace alexlink::detail {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
Integer content(const ZPoly& f);
/// Divides out the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& f);
/// Exact quotient over Z, or nullopt.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const Integer& m);
/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly gcd(ZPoly a, ZPoly b);
ZPoly derivative(const ZPoly& f);
/// Euclidean norm rounded up.
Integer norm2_ceil(const ZPoly& f);

}  // namespace alexlink::detail
