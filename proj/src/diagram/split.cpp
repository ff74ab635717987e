#include <algorithm>
#include <functional>

#include "alexlink/diagram.hpp"

namespace alexlink {

std::vector<std::vector<int>> split_partition(const LinkDiagram& d_in) {
  const LinkDiagram d = reduce_diagram(d_in);
  const int m = d.component_count();
  std::vector<std::vector<bool>> above(m, std::vector<bool>(m, false));
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.is_mixed(c)) above[d.over_component(c)][d.under_component(c)] = true;
  // Transitive closure; m is small.
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (above[i][k])
        for (int j = 0; j < m; ++j)
          if (above[k][j]) above[i][j] = true;
  std::vector<int> piece(m, -1);
  std::vector<std::vector<int>> pieces;
  for (int i = 0; i < m; ++i) {
    if (piece[i] >= 0) continue;
    piece[i] = static_cast<int>(pieces.size());
    pieces.push_back({i});
    for (int j = i + 1; j < m; ++j)
      if (piece[j] < 0 && above[i][j] && above[j][i]) {
        piece[j] = piece[i];
        pieces.back().push_back(j);
      }
  }
  return pieces;
}

std::optional<std::vector<std::vector<int>>> split_diagrammatically(const LinkDiagram& d) {
  auto pieces = split_partition(d);
  if (d.component_count() >= 2 && pieces.size() == 1) return std::nullopt;
  return pieces;
}

}  // namespace alexlink
