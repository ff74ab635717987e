#include <algorithm>
#include <map>

#include "alexlink/diagram.hpp"

namespace alexlink {

namespace {

void check_crossing(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
}

// Slot numbers counterclockwise from the incoming under-strand.
int in_slot(const LinkDiagram& d, const Passage& p) {
  if (!p.over) return 0;
  return d.sign(p.crossing) > 0 ? 3 : 1;
}

int out_slot(const LinkDiagram& d, const Passage& p) { return (in_slot(d, p) + 2) % 4; }

}  // namespace

LinkDiagram remove_crossings(const LinkDiagram& d, const std::set<int>& crossings) {
  std::vector<int> renumber(d.crossing_count(), -1);
  std::vector<int> signs;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (crossings.count(c)) continue;
    renumber[c] = static_cast<int>(signs.size());
    signs.push_back(d.sign(c));
  }
  std::vector<std::vector<Passage>> walks;
  for (const auto& w : d.walks()) {
    std::vector<Passage> kept;
    for (const auto& p : w)
      if (renumber[p.crossing] >= 0) kept.push_back(Passage{renumber[p.crossing], p.over});
    walks.push_back(std::move(kept));
  }
  return LinkDiagram(std::move(walks), std::move(signs));
}

LinkDiagram crossing_change(const LinkDiagram& d, int crossing) {
  check_crossing(d, crossing);
  auto walks = d.walks();
  for (auto& w : walks)
    for (auto& p : w)
      if (p.crossing == crossing) p.over = !p.over;
  auto signs = d.signs();
  signs[crossing] = -signs[crossing];
  return LinkDiagram(std::move(walks), std::move(signs));
}

LinkDiagram mirror(const LinkDiagram& d) {
  auto walks = d.walks();
  for (auto& w : walks)
    for (auto& p : w) p.over = !p.over;
  auto signs = d.signs();
  for (int& s : signs) s = -s;
  return LinkDiagram(std::move(walks), std::move(signs));
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.component_count()) throw std::out_of_range("component index out of range");
  auto walks = d.walks();
  auto& w = walks[component];
  if (w.size() > 1) std::reverse(w.begin() + 1, w.end());
  auto signs = d.signs();
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.is_mixed(c) && (d.over_component(c) == component || d.under_component(c) == component)) signs[c] = -signs[c];
  return LinkDiagram(std::move(walks), std::move(signs));
}

LinkDiagram smoothing(const LinkDiagram& d, int crossing) {
  check_crossing(d, crossing);
  const PassageRef o = d.over_at(crossing);
  const PassageRef u = d.under_at(crossing);
  // The passages of w strictly after index `from` up to (excluding) `to`, cyclically.
  auto segment = [](const std::vector<Passage>& w, int from, int to) {
    std::vector<Passage> out;
    const int len = static_cast<int>(w.size());
    for (int i = (from + 1) % len; i != to; i = (i + 1) % len) out.push_back(w[i]);
    return out;
  };
  auto walks = d.walks();
  if (o.component == u.component) {
    const auto& w = d.walk(o.component);
    auto first = segment(w, u.index, o.index);
    auto second = segment(w, o.index, u.index);
    walks[o.component] = std::move(first);
    walks.insert(walks.begin() + o.component + 1, std::move(second));
  } else {
    const auto& a = d.walk(u.component);
    const auto& b = d.walk(o.component);
    auto merged = segment(a, u.index, u.index);
    auto rest = segment(b, o.index, o.index);
    merged.insert(merged.end(), rest.begin(), rest.end());
    const int keep = std::min(u.component, o.component);
    const int drop = std::max(u.component, o.component);
    walks[keep] = std::move(merged);
    walks.erase(walks.begin() + drop);
  }
  for (auto& w : walks)
    for (auto& p : w)
      if (p.crossing > crossing) --p.crossing;
  auto signs = d.signs();
  signs.erase(signs.begin() + crossing);
  return LinkDiagram(std::move(walks), std::move(signs));
}

LinkDiagram delete_components(const LinkDiagram& d, const std::set<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("delete_components needs at least one component to keep");
  for (int k : keep)
    if (k < 0 || k >= d.component_count()) throw std::out_of_range("component index out of range");
  std::set<int> dropped;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (!keep.count(d.over_component(c)) || !keep.count(d.under_component(c))) dropped.insert(c);
  const LinkDiagram thinned = remove_crossings(d, dropped);
  std::vector<std::vector<Passage>> walks;
  for (int k : keep) walks.push_back(thinned.walk(k));
  return LinkDiagram(std::move(walks), thinned.signs());
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  auto walks = a.walks();
  const int offset = a.crossing_count();
  for (auto w : b.walks()) {
    for (auto& p : w) p.crossing += offset;
    walks.push_back(std::move(w));
  }
  auto signs = a.signs();
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  return LinkDiagram(std::move(walks), std::move(signs));
}

namespace {

std::optional<int> find_r1(const LinkDiagram& d) {
  for (const auto& w : d.walks()) {
    const std::size_t len = w.size();
    for (std::size_t i = 0; i < len; ++i)
      if (len >= 2 && w[i].crossing == w[(i + 1) % len].crossing) return w[i].crossing;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_r2(const LinkDiagram& d) {
  for (const auto& w : d.walks()) {
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i) {
      const Passage& p = w[i];
      const Passage& q = w[(i + 1) % len];
      if (!p.over || !q.over || p.crossing == q.crossing) continue;
      const int c1 = p.crossing;
      const int c2 = q.crossing;
      const PassageRef u1 = d.under_at(c1);
      const PassageRef u2 = d.under_at(c2);
      auto next_index = [&](const PassageRef& r) {
        return (r.index + 1) % static_cast<int>(d.walk(r.component).size());
      };
      // Candidate under-edges f between c1 and c2, as (slot at c1, slot at c2).
      std::vector<std::pair<int, int>> fs;
      if (u1.component == u2.component && next_index(u1) == u2.index) fs.emplace_back(2, 0);
      if (u1.component == u2.component && next_index(u2) == u1.index) fs.emplace_back(0, 2);
      const int e_at_c1 = out_slot(d, p);
      const int e_at_c2 = in_slot(d, q);
      for (const auto& [f_at_c1, f_at_c2] : fs)
        for (int turn : {1, 3})
          if (f_at_c2 == (e_at_c2 + turn) % 4 && e_at_c1 == (f_at_c1 + turn) % 4) return std::pair{c1, c2};
    }
  }
  return std::nullopt;
}

}  // namespace

LinkDiagram reduce_diagram(const LinkDiagram& d) {
  LinkDiagram cur = d;
  for (;;) {
    if (auto c = find_r1(cur)) {
      cur = remove_crossings(cur, {*c});
      continue;
    }
    if (auto pair = find_r2(cur)) {
      cur = remove_crossings(cur, {pair->first, pair->second});
      continue;
    }
    return cur;
  }
}

}  // namespace alexlink
