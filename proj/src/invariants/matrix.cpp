#include <algorithm>
#include <limits>
#include <random>

#include "alexlink/factor.hpp"
#include "alexlink/invariants.hpp"

namespace alexlink {

namespace {

std::size_t var_count_of(const PolyMatrix& m, std::size_t fallback) {
  for (const auto& row : m)
    for (const auto& e : row) return e.var_count();
  return fallback;
}

std::size_t nonzeros_in_row(const PolyMatrix& m, std::size_t i) {
  return static_cast<std::size_t>(std::count_if(m[i].begin(), m[i].end(), [](const LaurentPoly& e) { return !e.is_zero(); }));
}

std::size_t nonzeros_in_col(const PolyMatrix& m, std::size_t j) {
  return static_cast<std::size_t>(
      std::count_if(m.begin(), m.end(), [j](const auto& row) { return !row[j].is_zero(); }));
}

void drop_zero_lines(PolyMatrix& m) {
  std::erase_if(m, [](const auto& row) { return std::all_of(row.begin(), row.end(), [](const LaurentPoly& e) { return e.is_zero(); }); });
  if (m.empty()) return;
  for (std::size_t j = m[0].size(); j-- > 0;)
    if (nonzeros_in_col(m, j) == 0)
      for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
  if (!m.empty() && m[0].empty()) m.clear();
}

// Index of the nonzero entry with the fewest terms in column c among rows >= from.
std::optional<std::size_t> sparsest_pivot(const PolyMatrix& m, std::size_t c, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < m.size(); ++i)
    if (!m[i][c].is_zero() && (!best || m[i][c].term_count() < m[*best][c].term_count())) best = i;
  return best;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("fraction-free elimination produced an inexact quotient");
  return *q;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, base = mulmod(base, base))
    if (e & 1) r = mulmod(r, base);
  return r;
}

std::uint64_t reduce_integer(const Integer& c) {
  Integer r = c % Integer(static_cast<unsigned long>(kPrime));
  if (r < 0) r += Integer(static_cast<unsigned long>(kPrime));
  return r.get_ui();
}

}  // namespace

UnitReduction eliminate_units(PolyMatrix m) {
  UnitReduction out;
  drop_zero_lines(m);
  while (!m.empty()) {
    // Markowitz cost keeps fill-in low.
    std::size_t best_i = 0, best_j = 0, best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::size_t rn = nonzeros_in_row(m, i);
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (!m[i][j].is_unit()) continue;
        const std::size_t cost = (rn - 1) * (nonzeros_in_col(m, j) - 1);
        if (cost < best_cost) best_cost = cost, best_i = i, best_j = j;
      }
    }
    if (best_cost == std::numeric_limits<std::size_t>::max()) break;
    const auto& [mono, coeff] = m[best_i][best_j].leading_term();
    const LaurentPoly inverse = LaurentPoly::monomial(mono.inverse(), coeff);  // coeff is ±1
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a == best_i || m[a][best_j].is_zero()) continue;
      const LaurentPoly f = m[a][best_j] * inverse;
      for (std::size_t b = 0; b < m[a].size(); ++b)
        if (!m[best_i][b].is_zero()) m[a][b] -= f * m[best_i][b];
    }
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(best_i));
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_j));
    ++out.pivots;
    drop_zero_lines(m);
  }
  out.rest = std::move(m);
  return out;
}

LaurentPoly determinant(PolyMatrix m, std::size_t vars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(vars, 1);
  vars = var_count_of(m, vars);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(vars, 1);
  for (std::size_t k = 0; k < n; ++k) {
    auto p = sparsest_pivot(m, k, k);
    if (!p) return LaurentPoly(vars);
    if (*p != k) std::swap(m[*p], m[k]), sign = -sign;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly(vars);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int exact_rank(PolyMatrix m, std::size_t vars) {
  if (m.empty()) return 0;
  vars = var_count_of(m, vars);
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  LaurentPoly prev = LaurentPoly::constant(vars, 1);
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    auto p = sparsest_pivot(m, c, r);
    if (!p) continue;
    std::swap(m[*p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = exact_quotient(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = LaurentPoly(vars);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int randomized_rank(const PolyMatrix& m, std::uint64_t seed) {
  if (m.empty()) return 0;
  const std::size_t vars = var_count_of(m, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 2);
  std::vector<std::uint64_t> point(vars), inverse(vars);
  for (std::size_t v = 0; v < vars; ++v) point[v] = dist(rng), inverse[v] = powmod(point[v], kPrime - 2);

  std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(m[0].size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      for (const auto& [mono, c] : m[i][j].terms()) {
        std::uint64_t t = reduce_integer(c);
        for (std::size_t v = 0; v < vars; ++v)
          t = mulmod(t, mono[v] >= 0 ? powmod(point[v], static_cast<std::uint64_t>(mono[v]))
                                     : powmod(inverse[v], static_cast<std::uint64_t>(-mono[v])));
        a[i][j] = (a[i][j] + t) % kPrime;
      }

  std::size_t r = 0;
  for (std::size_t c = 0; c < a[0].size() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = powmod(a[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] = (a[i][j] + kPrime - mulmod(f, a[r][j])) % kPrime;
    }
    ++r;
  }
  return static_cast<int>(r);
}

LaurentPoly minors_gcd(const PolyMatrix& m, std::size_t vars, int k) {
  vars = var_count_of(m, vars);
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  if (k <= 0) return one;
  auto red = eliminate_units(m);
  const int kk = k - red.pivots;
  if (kk <= 0) return one;
  const PolyMatrix& rest = red.rest;
  if (rest.empty() || static_cast<std::size_t>(kk) > std::min(rest.size(), rest[0].size())) return LaurentPoly(vars);

  const std::size_t rows = rest.size(), cols = rest[0].size(), n = static_cast<std::size_t>(kk);
  auto first_combo = [n] {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i;
    return c;
  };
  auto next_combo = [n](std::vector<std::size_t>& c, std::size_t total) {
    for (std::size_t i = n; i-- > 0;)
      if (c[i] < total - n + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    return false;
  };

  LaurentPoly acc(vars);
  auto rs = first_combo();
  do {
    auto cs = first_combo();
    do {
      PolyMatrix sub(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sub[i][j] = rest[rs[i]][cs[j]];
      LaurentPoly det = determinant(std::move(sub), vars);
      if (det.is_zero()) continue;
      acc = acc.is_zero() ? normalize_unit(det).poly() : gcd(acc, det);
      if (acc.is_unit()) return one;
    } while (next_combo(cs, cols));
  } while (next_combo(rs, rows));
  return acc;
}

}  // namespace alexlink
