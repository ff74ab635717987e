#include "factor/upoly.hpp"

#include <algorithm>

namespace alexlink::detail {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly out(a);
  for (auto& x : out) x *= c;
  trim(out);
  return out;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  Integer c = content(f);
  if (f.back() < 0) c = -c;
  ZPoly out(f);
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return ZPoly{};
  if (b.size() > a.size()) return std::nullopt;
  // A root-free quick rejection: the constant terms must divide.
  if (b.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t()))
    return std::nullopt;
  ZPoly r(a);
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    q[k] = c;
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  trim(q);
  return q;
}

ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
  ZPoly out(f.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (out[i] > half) out[i] -= m;
  }
  trim(out);
  return out;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly out(f.size() > 1 ? f.size() - 1 : 0);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

namespace {

// a * lc(b)^k mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

ZPoly gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Integer c;
  const Integer ca = content(a);
  const Integer cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return scale(a, c);
    b = primitive_part(r);
  }
  return ZPoly{c};
}

Integer norm2_ceil(const ZPoly& f) {
  Integer s = 0;
  for (const auto& c : f) s += c * c;
  Integer r = sqrt(s);
  if (r * r < s) ++r;
  return r;
}

}  // namespace alexlink::detail
