#include <unordered_map>

#include "alexlink/invariants.hpp"

namespace alexlink {

CrossingBudgetExceeded::CrossingBudgetExceeded(int crossings, int budget)
    : std::runtime_error("diagram has " + std::to_string(crossings) + " crossings after reduction; Conway budget is " +
                         std::to_string(budget)) {}

Integer ConwayPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coefficients.size()) ? coefficients[static_cast<std::size_t>(k)] : Integer(0);
}

std::string to_string(const ConwayPoly& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (int k = c.degree(); k >= 0; --k) {
    const Integer& a = c.coefficients[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (out.empty())
      out += a < 0 ? "-" : "";
    else
      out += a < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str() + (k > 0 ? "*" : "");
    if (k > 0) out += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return out;
}

namespace {

void trim(ConwayPoly& c) {
  while (!c.coefficients.empty() && c.coefficients.back() == 0) c.coefficients.pop_back();
}

// a + sign * z * b
ConwayPoly add_shifted(ConwayPoly a, const ConwayPoly& b, int sign) {
  if (a.coefficients.size() < b.coefficients.size() + 1) a.coefficients.resize(b.coefficients.size() + 1, 0);
  for (std::size_t k = 0; k < b.coefficients.size(); ++k) a.coefficients[k + 1] += sign * b.coefficients[k];
  trim(a);
  return a;
}

// First crossing met from below when walking components in order from their
// first passage. None means the diagram is descending, hence an unlink.
std::optional<int> first_ascending_crossing(const LinkDiagram& d) {
  std::vector<bool> seen(static_cast<std::size_t>(d.crossing_count()), false);
  for (const auto& w : d.walks())
    for (const auto& p : w) {
      if (seen[static_cast<std::size_t>(p.crossing)]) continue;
      if (!p.over) return p.crossing;
      seen[static_cast<std::size_t>(p.crossing)] = true;
    }
  return std::nullopt;
}

class Skein {
 public:
  ConwayPoly eval(const LinkDiagram& raw) {
    // Reidemeister reduction only removes crossings and leaves a reduced
    // diagram untouched, so (crossings, ascending crossings) strictly drops.
    const LinkDiagram d = reduce_diagram(raw);
    std::string key = d.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ConwayPoly out = compute(d);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  ConwayPoly compute(const LinkDiagram& d) {
    const int m = d.component_count();
    if (m > 1 && split_partition(d).size() > 1) return {};
    auto c = first_ascending_crossing(d);
    if (!c) return m == 1 ? ConwayPoly{{1}} : ConwayPoly{};
    // sign +1: D+ = D- + z D0; sign -1: D- = D+ - z D0.
    return add_shifted(eval(crossing_change(d, *c)), eval(smoothing(d, *c)), d.sign(*c));
  }

  std::unordered_map<std::string, ConwayPoly> memo_;
};

}  // namespace

ConwayPoly conway_polynomial(const LinkDiagram& d, int budget) {
  const LinkDiagram r = reduce_diagram(d);
  if (r.crossing_count() > budget) throw CrossingBudgetExceeded(r.crossing_count(), budget);
  return Skein().eval(r);
}

LaurentPoly conway_to_alexander(const ConwayPoly& c) {
  if (c.is_zero()) return LaurentPoly(1);
  // z^k = (t - 1)^k t^(-k/2); multiplying by t^(K/2) with K = degree leaves
  // integral exponents because only one parity occurs.
  const int top = c.degree();
  const LaurentPoly t_minus_1 = LaurentPoly::variable(1, 0) - LaurentPoly::constant(1, 1);
  LaurentPoly out(1);
  for (int k = 0; k <= top; ++k) {
    const Integer& a = c.coefficients[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    if ((top - k) % 2 != 0) throw std::invalid_argument("Conway polynomial mixes parities");
    out += t_minus_1.pow(static_cast<unsigned>(k)).shifted(Monomial{(top - k) / 2}) * a;
  }
  return normalize_unit(out).poly();
}

LaurentPoly one_variable_alexander(const LinkDiagram& d, int budget) {
  return conway_to_alexander(conway_polynomial(d, budget));
}

Integer sato_levine(const LinkDiagram& d, int budget) {
  if (d.component_count() != 2) throw std::invalid_argument("Sato-Levine invariant needs a 2-component link");
  if (linking_number(d, 0, 1) != 0) throw std::invalid_argument("Sato-Levine invariant needs linking number 0");
  return -conway_polynomial(d, budget).coefficient(3);
}

}  // namespace alexlink
