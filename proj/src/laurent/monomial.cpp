#include "alexlink/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace alexlink {

VariableCountMismatch::VariableCountMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("variable count mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.size() != size()) throw VariableCountMismatch(size(), other.size());
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out(*this);
  for (int& e : out.exps_) e = -e;
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace alexlink
