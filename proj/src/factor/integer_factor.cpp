#include "factor/integer_factor.hpp"

#include <stdexcept>

namespace alexlink::detail {

namespace {

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite n.
Integer rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw std::domain_error("factorization of zero");
  Integer n = abs(n_in);
  std::map<Integer, int> out;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  split(n, out);
  return out;
}

}  // namespace alexlink::detail
