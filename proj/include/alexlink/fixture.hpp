// Link fixture files: one link per file, line-oriented "key: value" records.
#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alexlink/diagram.hpp"

namespace alexlink {

class FixtureError : public std::runtime_error {
 public:
  FixtureError(const std::string& origin, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Quantities that fixtures may annotate.
inline constexpr const char* kQuantities[] = {"unlinking", "splitting", "weak_splitting"};

struct Fixture {
  std::string name;
  int components = 0;
  int free_loops = 0;
  std::string pd;
  /// Established values from outside this tool.
  std::map<std::string, int> known;
  /// Unresolved values: inclusive ranges.
  std::map<std::string, std::pair<int, int>> open;
  /// Zero-based crossing indices of a known splitting sequence.
  std::vector<int> splitting_sequence;
  LinkDiagram diagram;
};

Fixture parse_fixture(const std::string& text, const std::string& origin = "<input>");
/// Throws FixtureError for I/O failures as well (line 0).
Fixture load_fixture(const std::filesystem::path& path);
/// A fixture file itself, or the *.link files of a directory sorted by name.
std::vector<std::filesystem::path> fixture_paths(const std::filesystem::path& path);

}  // namespace alexlink
