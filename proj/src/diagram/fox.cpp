#include "alexlink/diagram.hpp"

namespace alexlink {

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  WirtingerPresentation wp;
  // arc_after[k][i]: arc carrying the edge that leaves passage i of component k.
  std::vector<std::vector<int>> arc_after(d.component_count());
  for (int k = 0; k < d.component_count(); ++k) {
    const auto& w = d.walk(k);
    const int len = static_cast<int>(w.size());
    arc_after[k].assign(len, -1);
    int first_under = -1;
    for (int i = 0; i < len && first_under < 0; ++i)
      if (!w[i].over) first_under = i;
    if (first_under < 0) {
      const int arc = static_cast<int>(wp.arc_component.size());
      wp.arc_component.push_back(k);
      for (int i = 0; i < len; ++i) arc_after[k][i] = arc;
      continue;
    }
    int arc = -1;
    for (int step = 0; step < len; ++step) {
      const int i = (first_under + step) % len;
      if (!w[i].over) {
        arc = static_cast<int>(wp.arc_component.size());
        wp.arc_component.push_back(k);
      }
      arc_after[k][i] = arc;
    }
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const PassageRef o = d.over_at(c);
    const PassageRef u = d.under_at(c);
    const int len = static_cast<int>(d.walk(u.component).size());
    wp.relations.push_back(WirtingerPresentation::Relation{
        c, arc_after[o.component][o.index], arc_after[u.component][(u.index + len - 1) % len],
        arc_after[u.component][u.index], d.sign(c)});
  }
  return wp;
}

FoxJacobian fox_jacobian(const LinkDiagram& d) {
  const WirtingerPresentation wp = wirtinger(d);
  const std::size_t m = static_cast<std::size_t>(std::max(1, d.component_count()));
  FoxJacobian j;
  j.vars = m;
  j.column_component = wp.arc_component;
  const std::size_t cols = wp.arc_component.size();
  auto t = [&](int arc) { return LaurentPoly::variable(m, static_cast<std::size_t>(wp.arc_component[arc])); };
  auto t_inv = [&](int arc) {
    Monomial e(m);
    e[static_cast<std::size_t>(wp.arc_component[arc])] = -1;
    return LaurentPoly::monomial(e);
  };
  const LaurentPoly one = LaurentPoly::constant(m, 1);
  for (const auto& r : wp.relations) {
    std::vector<LaurentPoly> row(cols, LaurentPoly(m));
    if (r.sign > 0) {
      row[r.in_arc] += t(r.over_arc);
      row[r.over_arc] += one - t(r.in_arc);
    } else {
      row[r.in_arc] += t_inv(r.over_arc);
      row[r.over_arc] += t_inv(r.over_arc) * t(r.in_arc) - t_inv(r.over_arc);
    }
    row[r.out_arc] -= one;
    j.entries.push_back(std::move(row));
  }
  return j;
}

}  // namespace alexlink
