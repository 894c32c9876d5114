#pragma once

// Small spaces and maps shared by the unit tests, with the point names used
// throughout the documentation.

#include "specorder/morphism.hpp"
#include "specorder/space.hpp"

namespace fixtures {

using specorder::FiniteSpace;
using specorder::SpaceMap;

inline FiniteSpace a3() { return specorder::build_space({"a", "b", "c"}, {}); }
inline FiniteSpace ch1() { return specorder::build_space({"p", "q"}, {{"p", "q"}}); }
inline FiniteSpace ch2() { return specorder::build_space({"x0", "x1", "x2"}, {{"x0", "x1"}, {"x1", "x2"}}); }
inline FiniteSpace kst() {
  return specorder::build_space({"e2", "ht", "hs", "m"}, {{"e2", "ht"}, {"e2", "hs"}, {"ht", "m"}, {"hs", "m"}});
}
inline FiniteSpace kt() { return specorder::build_space({"e1", "p"}, {{"e1", "p"}}); }
inline FiniteSpace nont0() { return specorder::build_space({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }
inline FiniteSpace v_tree() { return specorder::build_space({"r", "u", "v"}, {{"r", "u"}, {"r", "v"}}); }

/// Projection Spec k[s,t] -> Spec k[t] on the four-point truncation.
inline SpaceMap proj() {
  return SpaceMap::from_names(kst(), kt(), {{"e2", "e1"}, {"hs", "e1"}, {"ht", "p"}, {"m", "p"}});
}

inline SpaceMap identity(const FiniteSpace& s) {
  std::vector<specorder::PointIndex> img(s.size());
  for (specorder::PointIndex i = 0; i < s.size(); ++i) img[i] = i;
  return SpaceMap(s, s, img);
}

}  // namespace fixtures
