#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "alexlink/diagram.hpp"

namespace alexlink {

namespace {

struct Slot {
  int crossing;
  int position;
  auto operator<=>(const Slot&) const = default;
};

class PDTokenizer {
 public:
  explicit PDTokenizer(std::string_view text) : text_(text) {}

  PDCode parse() {
    PDCode pd;
    skip();
    bool wrapped = false;
    if (text_.substr(pos_, 3) == "PD[") {
      pos_ += 3;
      wrapped = true;
    }
    skip();
    while (pos_ < text_.size() && text_[pos_] != ']') {
      expect('X');
      expect('[');
      std::array<int, 4> x{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) expect(',');
        x[i] = number();
      }
      expect(']');
      pd.crossings.push_back(x);
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip();
      }
    }
    if (wrapped) expect(']');
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return pd;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PDParseError("PD syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a positive edge label");
    const int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v <= 0) fail("edge labels must be positive");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Entry into a crossing through `slot`, the strand leaving through slot+2.
struct Entry {
  Slot slot;
  int incoming_label;
};

}  // namespace

PDCode parse_pd_code(std::string_view text) { return PDTokenizer(text).parse(); }

LinkDiagram from_pd(const PDCode& pd, int free_loops) {
  if (free_loops < 0) throw PDParseError("negative free loop count");
  const int n = static_cast<int>(pd.crossings.size());
  std::map<int, std::vector<Slot>> occurrences;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occurrences[pd.crossings[c][p]].push_back(Slot{c, p});
  for (const auto& [label, slots] : occurrences)
    if (slots.size() != 2)
      throw PDParseError("edge label " + std::to_string(label) + " occurs " + std::to_string(slots.size()) +
                         " times, expected exactly twice");

  auto partner = [&](const Slot& s) {
    const auto& both = occurrences.at(pd.crossings[s.crossing][s.position]);
    return both[0] == s ? both[1] : both[0];
  };
  auto trace = [&](Slot start) {
    std::vector<Entry> entries;
    Slot at = start;
    do {
      entries.push_back(Entry{at, pd.crossings[at.crossing][at.position]});
      at = partner(Slot{at.crossing, (at.position + 2) % 4});
      if (entries.size() > 4 * static_cast<std::size_t>(n)) throw PDParseError("component traversal does not close");
    } while (!(at == start));
    return entries;
  };

  std::set<int> visited_labels;
  std::vector<std::vector<Passage>> walks;
  std::vector<int> signs(n, 0);
  for (const auto& [label, slots] : occurrences) {
    if (visited_labels.count(label)) continue;
    std::vector<Entry> forward = trace(slots[0]);
    bool under_forward = false, under_backward = false;
    for (const Entry& e : forward) {
      if (e.slot.position == 0) under_forward = true;
      if (e.slot.position == 2) under_backward = true;
    }
    if (under_forward && under_backward)
      throw PDParseError("inconsistent orientation along the component containing edge " + std::to_string(label));
    bool reverse = under_backward;
    if (!under_forward && !under_backward) {
      // Only over-passages: follow increasing labels.
      std::vector<Entry> backward = trace(slots[1]);
      auto next_label = [&](const std::vector<Entry>& es) {
        const Slot exit{es[0].slot.crossing, (es[0].slot.position + 2) % 4};
        return pd.crossings[exit.crossing][exit.position];
      };
      const int a = next_label(forward);
      const int b = next_label(backward);
      if (a == b)
        reverse = slots[1] < slots[0];
      else if (a == label + 1 || b == label + 1)
        reverse = b == label + 1;
      else
        reverse = b < a;
    }
    std::vector<Entry> entries = reverse ? trace(slots[1]) : forward;
    std::vector<Passage> walk;
    // The smallest label enters entries[0]; it must be the edge leaving
    // passage 0, so passage 0 is the last entry.
    walk.push_back(Passage{entries.back().slot.crossing, entries.back().slot.position % 2 == 1});
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
      walk.push_back(Passage{entries[i].slot.crossing, entries[i].slot.position % 2 == 1});
    for (const Entry& e : entries) {
      visited_labels.insert(e.incoming_label);
      if (e.slot.position == 3) signs[e.slot.crossing] = 1;
      if (e.slot.position == 1) signs[e.slot.crossing] = -1;
    }
    walks.push_back(std::move(walk));
  }
  for (int i = 0; i < free_loops; ++i) walks.emplace_back();
  try {
    LinkDiagram d(std::move(walks), std::move(signs));
    // Planarity: every connected piece of the projection has n + 2 faces.
    std::vector<int> piece(n);
    std::iota(piece.begin(), piece.end(), 0);
    std::function<int(int)> find = [&](int x) { return piece[x] == x ? x : piece[x] = find(piece[x]); };
    for (const auto& w : d.walks())
      for (std::size_t i = 0; i + 1 < w.size(); ++i) piece[find(w[i].crossing)] = find(w[i + 1].crossing);
    std::set<int> roots;
    for (int c = 0; c < n; ++c) roots.insert(find(c));
    std::set<Slot> seen;
    int faces = 0;
    for (int c = 0; c < n; ++c)
      for (int p = 0; p < 4; ++p) {
        Slot s{c, p};
        if (seen.count(s)) continue;
        ++faces;
        while (!seen.count(s)) {
          seen.insert(s);
          const Slot other = partner(s);
          s = Slot{other.crossing, (other.position + 1) % 4};
        }
      }
    if (faces != n + 2 * static_cast<int>(roots.size()))
      throw PDParseError("PD code does not describe a planar diagram");
    return d;
  } catch (const std::invalid_argument& e) {
    throw PDParseError(e.what());
  }
}

LinkDiagram parse_pd(std::string_view text, int free_loops) { return from_pd(parse_pd_code(text), free_loops); }

}  // namespace alexlink
