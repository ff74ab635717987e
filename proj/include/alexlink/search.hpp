// Bounded crossing-change search for diagrammatic splitting and unlinking
// sequences on a single diagram.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alexlink/diagram.hpp"
#include "alexlink/obstructions.hpp"

namespace alexlink {

enum class SearchMode { any_crossing, inter_component };

/// split: every component in its own piece. unlink: additionally every
/// component, on its own, is a descending diagram after reduction.
enum class SearchTarget { split, unlink };

inline constexpr int kMaxSearchDepth = 4;
inline constexpr long kMaxSearchStates = 2'000'000;

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchResult {
  bool found = false;
  /// Zero-based crossings, increasing.
  std::vector<int> sequence;
  std::vector<std::vector<int>> partition;
  /// Depth of the hit, or the depth exhausted when nothing was found.
  int depth = 0;
};

/// Breadth-first over crossing subsets; the lexicographically smallest subset
/// at the shallowest depth wins. Throws SearchBudgetExceeded when max_depth
/// exceeds kMaxSearchDepth or the subset count exceeds kMaxSearchStates.
SearchResult bounded_split_search(const LinkDiagram& d, int max_depth, SearchMode mode,
                                  SearchTarget target = SearchTarget::split);

/// Whether d with the given crossings changed meets the target.
bool meets_target(const LinkDiagram& d, SearchTarget target);

struct GapInterval {
  int lower = 0;
  std::optional<int> upper;
  bool exact() const { return upper && *upper == lower; }
};

/// Splitting uses the inter-component result, weak splitting the better of
/// both split searches, unlinking the unlink search. Throws std::logic_error
/// when an upper bound falls below the lower bound.
std::map<Quantity, GapInterval> certify_gap(const ObstructionReport& report,
                                            const std::map<Quantity, SearchResult>& searches);

}  // namespace alexlink
