#include "specorder/dot.hpp"

#include <map>
#include <sstream>

#include "specorder/lengths.hpp"

namespace specorder {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const SpaceDocument& doc) {
  const FiniteSpace& s = doc.space;
  const LengthTable table(s);
  const std::size_t total = length_of_space(s, table).value;

  std::vector<std::size_t> level(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) level[x] = total - table.of_point(x);

  const auto components = irreducible_components(s);
  std::vector<std::size_t> owner(s.size(), 0);
  Mask placed = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for_each_bit(components[c].bits() & ~placed, [&](PointIndex x) { owner[x] = c; });
    placed |= components[c].bits();
  }

  std::ostringstream out;
  out << "digraph " << quoted(doc.name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto generic = s.names_of(initial_points(s, components[c]));
    std::string label = "component " + std::to_string(c) + ", generic";
    for (const auto& g : generic) label += " " + g;
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=" << quoted(label) << ";\n";
    for (PointIndex x = 0; x < s.size(); ++x) {
      if (owner[x] != c) continue;
      out << "    " << quoted(s.name(x)) << " [level=" << level[x] << "];\n";
    }
    out << "  }\n";
  }

  std::map<std::size_t, std::vector<PointIndex>> by_level;
  for (PointIndex x = 0; x < s.size(); ++x) by_level[level[x]].push_back(x);
  for (const auto& [k, pts] : by_level) {
    out << "  { rank=same;";
    for (PointIndex x : pts) out << " " << quoted(s.name(x)) << ";";
    out << " }\n";
  }

  for (PointIndex x = 0; x < s.size(); ++x) {
    for (PointIndex y = 0; y < s.size(); ++y) {
      if (!s.strictly_less(x, y) || !is_closest(s, x, y)) continue;
      out << "  " << quoted(s.name(x)) << " -> " << quoted(s.name(y)) << ";\n";
    }
  }
  for (PointIndex x = 0; x < s.size(); ++x) {
    for (PointIndex y = x + 1; y < s.size(); ++y) {
      if (s.equivalent(x, y)) {
        out << "  " << quoted(s.name(x)) << " -> " << quoted(s.name(y)) << " [dir=both, style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace specorder
