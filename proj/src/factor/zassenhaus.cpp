// Univariate factorization over Z: modular factorization, multifactor Hensel
// lifting and subset recombination.
#include <algorithm>
#include <functional>
#include <stdexcept>

#include "alexlink/factor.hpp"
#include "factor/modular.hpp"
#include "factor/upoly.hpp"

namespace alexlink {

namespace detail {
namespace {

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

ZPoly to_z(const FpPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Integer(static_cast<unsigned long>(f[i]));
  return out;
}

ZPoly mod_nonneg(const ZPoly& f, const Integer& m) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(out);
  return out;
}

// Lifts F ≡ g*h (mod p), g monic, to the same relation modulo p^k.
void lift_pair(const ZPoly& F, ZPoly& g, ZPoly& h, const FpOps& ops, int k) {
  const FpPoly g_p = ops.reduce(g);
  const FpPoly h_p = ops.reduce(h);
  FpPoly s, t;
  ops.ext_gcd(g_p, h_p, s, t);
  const Integer p(static_cast<unsigned long>(ops.F.p()));
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    ZPoly e = sub(F, mul(g, h));
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()))
        throw std::logic_error("Hensel lifting invariant violated");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    }
    const FpPoly c = ops.reduce(e);
    FpPoly q, a;
    ops.divmod(ops.mul(t, c), g_p, q, a);
    const FpPoly b = ops.add(ops.mul(s, c), ops.mul(q, h_p));
    g = add(g, scale(to_z(a), pj));
    h = add(h, scale(to_z(b), pj));
    pj *= p;
    g = mod_nonneg(g, pj);
    h = mod_nonneg(h, pj);
  }
}

// Monic lifts modulo p^k of the modular factors of F.
std::vector<ZPoly> lift_all(const ZPoly& F, std::span<const FpPoly> factors, const FpOps& ops,
                            int k, const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw std::logic_error("leading coefficient not invertible modulo p^k");
    return {mod_nonneg(scale(F, inv), modulus)};
  }
  ZPoly g = to_z(factors.front());
  FpPoly rest{ops.F.reduce(F.back())};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = ops.mul(rest, factors[i]);
  ZPoly h = to_z(rest);
  lift_pair(F, g, h, ops, k);
  std::vector<ZPoly> out{g};
  auto tail = lift_all(h, factors.subspan(1), ops, k, modulus);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Integer mod_symmetric(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (r > m / 2) r -= m;
  return r;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& modulus) {
  std::vector<ZPoly> found;
  for (std::size_t size = 1; 2 * size <= lifted.size();) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      const Integer& lc = f.back();
      Integer constant = lc;
      for (std::size_t i : idx) constant = constant * lifted[i].front() % modulus;
      constant = mod_symmetric(constant, modulus);
      if (constant == 0 || !mpz_divisible_p(Integer(lc * f.front()).get_mpz_t(), constant.get_mpz_t()))
        continue;
      ZPoly candidate{lc};
      for (std::size_t i : idx) candidate = mod_nonneg(mul(candidate, lifted[i]), modulus);
      candidate = primitive_part(symmetric_mod(candidate, modulus));
      auto quotient = divide_exact(f, candidate);
      if (!quotient) continue;
      found.push_back(candidate);
      f = std::move(*quotient);
      for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
      progress = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!progress) ++size;
  }
  if (degree(f) > 0) found.push_back(primitive_part(f));
  return found;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 1) return {f};
  static const std::vector<u64> primes = small_primes(1 << 16);

  // Several good primes; the one giving the fewest modular factors wins.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::optional<u64> best_prime;
  std::vector<FpPoly> best_factors;
  int good = 0;
  for (u64 p : primes) {
    if (p == 2) continue;
    const PrimeField F(p);
    const FpOps ops{F};
    if (F.reduce(f.back()) == 0) continue;
    const FpPoly fp = ops.reduce(f);
    if (!ops.is_squarefree(fp)) continue;
    auto factors = ops.factor_squarefree(fp, rng);
    if (!best_prime || factors.size() < best_factors.size()) {
      best_prime = p;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1 || ++good >= 5) break;
  }
  if (!best_prime) throw std::logic_error("no suitable prime for modular factorization");
  if (best_factors.size() == 1) return {f};

  const PrimeField F(*best_prime);
  const FpOps ops{F};
  Integer bound = 2 * abs(f.back()) * norm2_ceil(f);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  const Integer p(static_cast<unsigned long>(*best_prime));
  Integer modulus = p;
  int k = 1;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }
  auto lifted = lift_all(f, best_factors, ops, k, modulus);
  return recombine(f, std::move(lifted), modulus);
}

}  // namespace detail

std::vector<std::vector<Integer>> factor_univariate_squarefree(const std::vector<Integer>& f_in) {
  detail::ZPoly f = f_in;
  detail::trim(f);
  if (detail::degree(f) < 1) throw std::invalid_argument("expected a nonconstant polynomial");
  if (detail::content(f) != 1 || f.back() < 0)
    throw std::invalid_argument("expected a primitive polynomial with positive leading coefficient");
  std::vector<detail::ZPoly> out;
  if (f.front() == 0) {
    out.push_back({0, 1});
    f.erase(f.begin());
    if (f.front() == 0) throw std::invalid_argument("expected a square-free polynomial");
    if (detail::degree(f) == 0) return out;
  }
  auto rest = detail::zassenhaus(f);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end(), [](const detail::ZPoly& a, const detail::ZPoly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace alexlink
