#include "alexlink/fixture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace alexlink {

FixtureError::FixtureError(const std::string& origin, int line, const std::string& message)
    : std::runtime_error(origin + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

bool parse_int(const std::string& s, int& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool known_quantity(const std::string& q) {
  return std::any_of(std::begin(kQuantities), std::end(kQuantities), [&](const char* k) { return q == k; });
}

}  // namespace

Fixture parse_fixture(const std::string& text, const std::string& origin) {
  Fixture f;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int pd_line = 0;
  auto fail = [&](const std::string& msg) -> void { throw FixtureError(origin, line_no, msg); };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (!seen.insert(key).second) fail("duplicate key '" + key + "'");

    if (key == "name") {
      if (value.empty()) fail("empty name");
      f.name = value;
    } else if (key == "components") {
      if (!parse_int(value, f.components) || f.components < 1) fail("components must be a positive integer");
    } else if (key == "freeloops") {
      if (!parse_int(value, f.free_loops) || f.free_loops < 0) fail("freeloops must be a nonnegative integer");
    } else if (key == "pd") {
      f.pd = value;
      pd_line = line_no;
    } else if (key == "known") {
      for (const auto& item : split_list(value)) {
        const auto eq = item.find('=');
        int v = 0;
        if (eq == std::string::npos || !parse_int(trim(item.substr(eq + 1)), v) || v < 0)
          fail("known entries look like 'unlinking=3'");
        const std::string q = trim(item.substr(0, eq));
        if (!known_quantity(q)) fail("unknown quantity '" + q + "'");
        f.known[q] = v;
      }
    } else if (key == "open") {
      for (const auto& item : split_list(value)) {
        const auto eq = item.find('=');
        const auto dots = item.find("..");
        int lo = 0, hi = 0;
        if (eq == std::string::npos || dots == std::string::npos || dots < eq ||
            !parse_int(trim(item.substr(eq + 1, dots - eq - 1)), lo) || !parse_int(trim(item.substr(dots + 2)), hi) ||
            lo < 0 || hi < lo)
          fail("open entries look like 'unlinking=2..3'");
        const std::string q = trim(item.substr(0, eq));
        if (!known_quantity(q)) fail("unknown quantity '" + q + "'");
        f.open[q] = {lo, hi};
      }
    } else if (key == "splitting_sequence") {
      for (const auto& item : split_list(value)) {
        int c = 0;
        if (!parse_int(item, c) || c < 1) fail("splitting_sequence lists 1-based crossing numbers");
        f.splitting_sequence.push_back(c - 1);
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  line_no = 0;
  if (f.name.empty()) fail("missing 'name'");
  if (!seen.count("components")) fail("missing 'components'");
  if (!seen.count("pd")) fail("missing 'pd'");
  for (const auto& [q, v] : f.known)
    if (f.open.count(q)) fail("'" + q + "' is both known and open");
  try {
    f.diagram = parse_pd(f.pd, f.free_loops);
  } catch (const PDParseError& e) {
    throw FixtureError(origin, pd_line, e.what());
  }
  if (f.diagram.component_count() != f.components)
    throw FixtureError(origin, pd_line,
                       "diagram has " + std::to_string(f.diagram.component_count()) + " components, header says " +
                           std::to_string(f.components));
  for (int c : f.splitting_sequence)
    if (c >= f.diagram.crossing_count()) throw FixtureError(origin, 0, "splitting_sequence names a missing crossing");
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path.string());
}

std::vector<std::filesystem::path> fixture_paths(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw FixtureError(path.string(), 0, "no such file or directory");
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(path))
    if (entry.is_regular_file() && entry.path().extension() == ".link") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alexlink
