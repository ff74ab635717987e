// Oriented, ordered link diagrams: PD parsing, moves, Fox calculus.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alexlink/laurent.hpp"

namespace alexlink {

/// Crossings as 4-tuples of edge labels, counterclockwise from the incoming
/// under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  bool operator==(const PDCode&) const = default;
};

class PDParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One visit of a component to a crossing.
struct Passage {
  int crossing = 0;
  bool over = false;
  bool operator==(const Passage&) const = default;
};

struct PassageRef {
  int component = 0;
  int index = 0;
};

/// Components are cyclic walks through crossings; a walk with no passages is
/// a crossing-free loop. Crossing signs follow the right-hand rule. All
/// component and crossing indices are zero-based.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws std::invalid_argument unless every crossing is visited exactly
  /// once over and once under.
  LinkDiagram(std::vector<std::vector<Passage>> walks, std::vector<int> signs);

  int component_count() const { return static_cast<int>(walks_.size()); }
  int crossing_count() const { return static_cast<int>(signs_.size()); }
  const std::vector<std::vector<Passage>>& walks() const { return walks_; }
  const std::vector<Passage>& walk(int component) const { return walks_.at(component); }
  int sign(int crossing) const { return signs_.at(crossing); }
  const std::vector<int>& signs() const { return signs_; }
  PassageRef over_at(int crossing) const { return over_.at(crossing); }
  PassageRef under_at(int crossing) const { return under_.at(crossing); }
  int over_component(int crossing) const { return over_.at(crossing).component; }
  int under_component(int crossing) const { return under_.at(crossing).component; }
  bool is_mixed(int crossing) const { return over_component(crossing) != under_component(crossing); }

  /// Edges are numbered consecutively per component in component order
  /// starting at 1; edge k of a component runs from passage k to k+1.
  PDCode to_pd() const;
  /// PD text such as "X[1,5,2,4],X[3,1,4,6]"; crossing-free components are
  /// not representable and are omitted.
  std::string to_pd_string() const;
  /// Stable textual key: walks and signs.
  std::string key() const;

  bool operator==(const LinkDiagram& other) const {
    return walks_ == other.walks_ && signs_ == other.signs_;
  }

 private:
  void index();

  std::vector<std::vector<Passage>> walks_;
  std::vector<int> signs_;
  std::vector<PassageRef> over_;
  std::vector<PassageRef> under_;
};

/// Components ordered by smallest edge label, each walk starting on its
/// smallest label. Orientation is forced by under-strands; components that
/// only pass over are oriented along increasing labels. free_loops
/// crossing-free components are appended. Throws PDParseError.
LinkDiagram from_pd(const PDCode& pd, int free_loops = 0);
PDCode parse_pd_code(std::string_view text);
LinkDiagram parse_pd(std::string_view text, int free_loops = 0);

/// Half the signed count of crossings between components i and j. Throws
/// std::out_of_range for bad indices and std::invalid_argument for i == j.
int linking_number(const LinkDiagram& d, int i, int j);
/// Sum over pairs i < j.
int total_linking_number(const LinkDiagram& d);

LinkDiagram crossing_change(const LinkDiagram& d, int crossing);
/// Oriented resolution of one crossing; crossings after it shift down by one.
LinkDiagram smoothing(const LinkDiagram& d, int crossing);
/// Keeps the listed components in their original order, dropping every
/// crossing that touches a deleted component.
LinkDiagram delete_components(const LinkDiagram& d, const std::set<int>& keep);
LinkDiagram remove_crossings(const LinkDiagram& d, const std::set<int>& crossings);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse_component(const LinkDiagram& d, int component);

/// Applies Reidemeister I and II reductions until none applies.
LinkDiagram reduce_diagram(const LinkDiagram& d);

/// Components grouped into pieces that can be pulled apart in the given
/// diagram after Reidemeister I/II reduction: strongly connected components
/// of the relation "i passes over j". Pieces are sorted by smallest member.
std::vector<std::vector<int>> split_partition(const LinkDiagram& d);
/// nullopt when the diagram is connected in that sense with m >= 2.
std::optional<std::vector<std::vector<int>>> split_diagrammatically(const LinkDiagram& d);

/// Wirtinger generator data: arcs run between consecutive under-passages.
struct WirtingerPresentation {
  std::vector<int> arc_component;
  struct Relation {
    int crossing;
    int over_arc;
    int in_arc;
    int out_arc;
    int sign;
  };
  /// x_out = x_over^sign x_in x_over^-sign.
  std::vector<Relation> relations;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

struct FoxJacobian {
  std::size_t vars = 1;
  /// rows = relations, columns = generators.
  std::vector<std::vector<LaurentPoly>> entries;
  std::vector<int> column_component;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return column_component.size(); }
};

/// Abelianized Fox derivatives of the Wirtinger relations, t_i for
/// component i. Crossing-free components give zero columns.
FoxJacobian fox_jacobian(const LinkDiagram& d);

}  // namespace alexlink
