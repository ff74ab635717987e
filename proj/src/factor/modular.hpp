// Polynomials over F_p for a word-size odd prime p < 2^31.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "factor/upoly.hpp"

namespace alexlink::detail {

using u64 = std::uint64_t;

class PrimeField {
 public:
  explicit PrimeField(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return a * b % p_; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 inv(u64 a) const;
  u64 reduce(const Integer& x) const;

 private:
  u64 p_;
};

using FpPoly = std::vector<u64>;

struct FpOps {
  const PrimeField& F;

  void trim(FpPoly& f) const;
  FpPoly reduce(const ZPoly& f) const;
  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, u64 c) const;
  /// Quotient and remainder; b nonzero.
  void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const;
  FpPoly rem(const FpPoly& a, const FpPoly& b) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly derivative(const FpPoly& a) const;
  /// Monic gcd.
  FpPoly gcd(FpPoly a, FpPoly b) const;
  /// s*a + t*b = gcd(a, b), gcd monic.
  FpPoly ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const;
  FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const;
  bool is_squarefree(const FpPoly& f) const;
  /// Monic irreducible factors of a monic square-free polynomial.
  std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::mt19937_64& rng) const;

 private:
  void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng,
                    std::vector<FpPoly>& out) const;
};

}  // namespace alexlink::detail
