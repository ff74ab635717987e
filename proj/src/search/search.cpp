#include "alexlink/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace alexlink {

namespace {

// Some rotation of the walk meets every crossing first from above.
bool descending_from_some_start(const std::vector<Passage>& walk) {
  const std::size_t n = walk.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<int> seen;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const Passage& p = walk[(start + k) % n];
      if (std::find(seen.begin(), seen.end(), p.crossing) != seen.end()) continue;
      if (!p.over) ok = false;
      seen.push_back(p.crossing);
    }
    if (ok) return true;
  }
  return n == 0;
}

bool is_unknot_diagram(const LinkDiagram& knot) {
  const LinkDiagram r = reduce_diagram(knot);
  if (r.crossing_count() == 0) return true;
  return descending_from_some_start(r.walk(0)) || descending_from_some_start(reduce_diagram(mirror(r)).walk(0));
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool meets_target(const LinkDiagram& d, SearchTarget target) {
  const int m = d.component_count();
  if (static_cast<int>(split_partition(d).size()) != m) return false;
  if (target == SearchTarget::split) return true;
  for (int c = 0; c < m; ++c)
    if (!is_unknot_diagram(delete_components(d, {c}))) return false;
  return true;
}

SearchResult bounded_split_search(const LinkDiagram& d, int max_depth, SearchMode mode, SearchTarget target) {
  if (max_depth < 0 || max_depth > kMaxSearchDepth)
    throw SearchBudgetExceeded("search depth " + std::to_string(max_depth) + " outside 0.." +
                               std::to_string(kMaxSearchDepth));
  std::vector<int> eligible;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (mode == SearchMode::any_crossing || d.is_mixed(c)) eligible.push_back(c);
  const long n = static_cast<long>(eligible.size());
  long states = 0;
  for (int k = 0; k <= max_depth; ++k) states += binomial(n, k);
  if (states > kMaxSearchStates)
    throw SearchBudgetExceeded("search would visit " + std::to_string(states) + " crossing subsets");

  // Each inter-component change moves the total linking number by one and a
  // split link has total linking number 0.
  const bool prune_parity = mode == SearchMode::inter_component;
  const int parity = std::abs(total_linking_number(d)) % 2;

  SearchResult result;
  for (int depth = 0; depth <= max_depth; ++depth) {
    result.depth = depth;
    if (depth > n) break;
    if (prune_parity && depth % 2 != parity) continue;
    std::vector<int> pick(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      LinkDiagram cur = d;
      std::vector<int> sequence;
      for (int i : pick) {
        sequence.push_back(eligible[static_cast<std::size_t>(i)]);
        cur = crossing_change(cur, sequence.back());
      }
      if (meets_target(cur, target)) {
        result.found = true;
        result.sequence = std::move(sequence);
        result.partition = split_partition(cur);
        return result;
      }
      int i = depth - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - depth + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < depth; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  result.depth = max_depth;
  return result;
}

std::map<Quantity, GapInterval> certify_gap(const ObstructionReport& report,
                                            const std::map<Quantity, SearchResult>& searches) {
  std::map<Quantity, GapInterval> out;
  for (const auto& [q, bound] : report.bounds) {
    GapInterval g;
    g.lower = bound.lower;
    if (auto it = searches.find(q); it != searches.end() && it->second.found)
      g.upper = static_cast<int>(it->second.sequence.size());
    out[q] = g;
  }
  // Any splitting sequence is a weak one.
  auto& weak = out[Quantity::weak_splitting];
  if (const auto& sp = out[Quantity::splitting]; sp.upper && (!weak.upper || *sp.upper < *weak.upper))
    weak.upper = sp.upper;
  for (const auto& [q, g] : out)
    if (g.upper && *g.upper < g.lower)
      throw std::logic_error(std::string("upper bound below lower bound for ") + std::string(to_string(q)) + " of " +
                             report.link_name);
  return out;
}

}  // namespace alexlink
