#include "factor/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace alexlink::detail {

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2).
  u64 result = 1;
  u64 base = a % p_;
  for (u64 e = p_ - 2; e > 0; e >>= 1U) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

u64 PrimeField::reduce(const Integer& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p_));
}

void FpOps::trim(FpPoly& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly FpOps::reduce(const ZPoly& f) const {
  FpPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.reduce(f[i]);
  trim(out);
  return out;
}

FpPoly FpOps::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
  trim(out);
  return out;
}

FpPoly FpOps::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
  trim(out);
  return out;
}

FpPoly FpOps::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % F.p();
  }
  trim(out);
  return out;
}

FpPoly FpOps::scale(const FpPoly& a, u64 c) const {
  FpPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  trim(out);
  return out;
}

void FpOps::divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
  if (b.empty()) throw std::domain_error("division by zero polynomial in F_p[x]");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  const u64 lead_inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = F.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

FpPoly FpOps::rem(const FpPoly& a, const FpPoly& b) const {
  FpPoly q, r;
  divmod(a, b, q, r);
  return r;
}

FpPoly FpOps::monic(const FpPoly& a) const {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()));
}

FpPoly FpOps::derivative(const FpPoly& a) const {
  FpPoly out(a.size() > 1 ? a.size() - 1 : 0);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(a[i], i % F.p());
  trim(out);
  return out;
}

FpPoly FpOps::gcd(FpPoly a, FpPoly b) const {
  while (!b.empty()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly FpOps::ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{};
  FpPoly t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    divmod(r0, r1, q, r);
    FpPoly s2 = sub(s0, mul(q, s1));
    FpPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 k = F.inv(r0.back());
  s = scale(s0, k);
  t = scale(t0, k);
  return scale(r0, k);
}

FpPoly FpOps::powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const {
  FpPoly result{1};
  result = rem(result, m);
  FpPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

bool FpOps::is_squarefree(const FpPoly& f) const {
  const FpPoly d = derivative(f);
  if (d.empty()) return false;
  return gcd(f, d).size() == 1;
}

void FpOps::equal_degree(const FpPoly& f, int d, std::mt19937_64& rng,
                         std::vector<FpPoly>& out) const {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p() - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() < 2) continue;
    FpPoly g = gcd(f, a);
    if (g.size() == 1) {
      FpPoly h = powmod(a, exponent, f);
      h = sub(h, FpPoly{1});
      g = gcd(f, h);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      FpPoly q, r;
      divmod(f, g, q, r);
      equal_degree(g, d, rng, out);
      equal_degree(monic(q), d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> FpOps::factor_squarefree(const FpPoly& f_in, std::mt19937_64& rng) const {
  std::vector<FpPoly> out;
  FpPoly f = monic(f_in);
  const FpPoly x{0, 1};
  FpPoly h = x;
  const Integer p(static_cast<unsigned long>(F.p()));
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, p, f);
    FpPoly g = gcd(f, sub(h, x));
    if (g.size() > 1) {
      equal_degree(g, d, rng, out);
      FpPoly q, r;
      divmod(f, g, q, r);
      f = monic(q);
      h = rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(),
            [](const FpPoly& a, const FpPoly& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

}  // namespace alexlink::detail
