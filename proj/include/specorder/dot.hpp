#pragma once

#include <string>

#include "specorder/document.hpp"

namespace specorder {

/// Graphviz rendering of a space as a forest: cover edges only, pointing
/// from generalization to specialization and drawn bottom to top. A point at
/// level k has l(x) = l(E) - k, so generic points of top-dimensional
/// components sit at level 0 and closed points at level l(E). Each point is
/// clustered under the first irreducible component containing it. Output is
/// a function of the document alone.
std::string to_dot(const SpaceDocument& doc);

}  // namespace specorder
