#include <sstream>

#include "alexlink/diagram.hpp"

namespace alexlink {

LinkDiagram::LinkDiagram(std::vector<std::vector<Passage>> walks, std::vector<int> signs)
    : walks_(std::move(walks)), signs_(std::move(signs)) {
  index();
}

void LinkDiagram::index() {
  const int n = crossing_count();
  over_.assign(n, PassageRef{-1, -1});
  under_.assign(n, PassageRef{-1, -1});
  for (int c = 0; c < n; ++c)
    if (signs_[c] != 1 && signs_[c] != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  for (int k = 0; k < component_count(); ++k) {
    const auto& w = walks_[k];
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const int c = w[i].crossing;
      if (c < 0 || c >= n) throw std::invalid_argument("passage through unknown crossing");
      PassageRef& slot = w[i].over ? over_[c] : under_[c];
      if (slot.component >= 0) throw std::invalid_argument("crossing visited twice on the same level");
      slot = PassageRef{k, i};
    }
  }
  for (int c = 0; c < n; ++c)
    if (over_[c].component < 0 || under_[c].component < 0)
      throw std::invalid_argument("crossing " + std::to_string(c) + " lacks an over or under strand");
}

PDCode LinkDiagram::to_pd() const {
  std::vector<int> base(walks_.size(), 0);
  for (std::size_t k = 1; k < walks_.size(); ++k) base[k] = base[k - 1] + static_cast<int>(walks_[k - 1].size());
  auto label = [&](const PassageRef& p, int offset) {
    const int len = static_cast<int>(walks_[p.component].size());
    return base[p.component] + ((p.index + offset) % len + len) % len + 1;
  };
  PDCode pd;
  for (int c = 0; c < crossing_count(); ++c) {
    const int u_in = label(under_[c], -1);
    const int u_out = label(under_[c], 0);
    const int o_in = label(over_[c], -1);
    const int o_out = label(over_[c], 0);
    if (signs_[c] > 0)
      pd.crossings.push_back({u_in, o_out, u_out, o_in});
    else
      pd.crossings.push_back({u_in, o_in, u_out, o_out});
  }
  return pd;
}

std::string LinkDiagram::to_pd_string() const {
  std::ostringstream out;
  const PDCode pd = to_pd();
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    if (c > 0) out << ',';
    const auto& x = pd.crossings[c];
    out << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  return out.str();
}

std::string LinkDiagram::key() const {
  std::string out;
  for (const auto& w : walks_) {
    for (const auto& p : w) {
      out += std::to_string(p.crossing);
      out += p.over ? 'o' : 'u';
    }
    out += '|';
  }
  for (int s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

int linking_number(const LinkDiagram& d, int i, int j) {
  const int m = d.component_count();
  if (i < 0 || j < 0 || i >= m || j >= m) throw std::out_of_range("component index out of range");
  if (i == j) throw std::invalid_argument("linking number needs two distinct components");
  int total = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int a = d.over_component(c);
    const int b = d.under_component(c);
    if ((a == i && b == j) || (a == j && b == i)) total += d.sign(c);
  }
  if (total % 2 != 0) throw std::logic_error("odd signed crossing count between two components");
  return total / 2;
}

int total_linking_number(const LinkDiagram& d) {
  int total = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.is_mixed(c)) total += d.sign(c);
  return total / 2;
}

}  // namespace alexlink
