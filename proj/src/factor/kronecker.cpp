#include "factor/kronecker.hpp"

namespace alexlink::detail {

Kronecker Kronecker::covering(std::vector<std::size_t> order,
                              std::initializer_list<const LaurentPoly*> polys) {
  Kronecker k;
  k.vars = std::move(order);
  k.ring_vars = (*polys.begin())->var_count();
  std::size_t w = 1;
  for (std::size_t v : k.vars) {
    int top = 0;
    for (const LaurentPoly* p : polys) top = std::max(top, p->degree_in(v));
    k.weights.push_back(w);
    k.bases.push_back(static_cast<std::size_t>(top) + 1);
    w *= k.bases.back();
  }
  return k;
}

ZPoly Kronecker::image(const LaurentPoly& p) const {
  ZPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) e += static_cast<std::size_t>(m[vars[i]]) * weights[i];
    if (out.size() <= e) out.resize(e + 1);
    out[e] += c;
  }
  trim(out);
  return out;
}

LaurentPoly Kronecker::preimage(const ZPoly& u) const {
  LaurentPoly out(ring_vars);
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e] == 0) continue;
    Monomial m(ring_vars);
    std::size_t rest = e;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      m[vars[i]] = static_cast<int>(rest % bases[i]);
      rest /= bases[i];
    }
    if (rest != 0) return LaurentPoly(ring_vars);
    out.add_term(m, u[e]);
  }
  return out;
}

ZPoly dense_in(const LaurentPoly& p, std::size_t var) {
  if (p.is_zero()) return {};
  ZPoly out(static_cast<std::size_t>(p.degree_in(var)) + 1);
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m[var])] += c;
  trim(out);
  return out;
}

LaurentPoly sparse_in(const ZPoly& u, std::size_t vars, std::size_t var) {
  LaurentPoly out(vars);
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e] == 0) continue;
    Monomial m(vars);
    m[var] = static_cast<int>(e);
    out.add_term(m, u[e]);
  }
  return out;
}

}  // namespace alexlink::detail
