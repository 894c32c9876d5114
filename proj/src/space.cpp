#include "specorder/space.hpp"

#include <algorithm>
#include <map>

namespace specorder {

PointSet::PointSet(std::size_t universe, Mask bits) : universe_(universe), bits_(bits) {
  if (universe > kMaxPoints) {
    throw InvalidSpace(InvalidSpace::Kind::too_many_points,
                       "point sets are limited to " + std::to_string(kMaxPoints) + " points");
  }
  if ((bits & ~full_mask(universe)) != 0) {
    throw PreconditionFailed("point set member outside its space");
  }
}

PointSet PointSet::of(std::size_t universe, std::initializer_list<PointIndex> points) {
  Mask m = 0;
  for (auto p : points) {
    if (p >= universe) throw UnknownPoint("point index " + std::to_string(p) + " out of range");
    m |= bit(p);
  }
  return {universe, m};
}

std::vector<PointIndex> PointSet::indices() const {
  std::vector<PointIndex> out;
  out.reserve(size());
  for_each_bit(bits_, [&](PointIndex i) { out.push_back(i); });
  return out;
}

namespace {

void index_points(const std::vector<std::string>& points,
                  std::unordered_map<std::string, PointIndex>& index) {
  if (points.size() > kMaxPoints) {
    throw InvalidSpace(InvalidSpace::Kind::too_many_points,
                       "a space has at most " + std::to_string(kMaxPoints) + " points, got " +
                           std::to_string(points.size()));
  }
  index.clear();
  for (PointIndex i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw InvalidSpace(InvalidSpace::Kind::duplicate_point, "duplicate point '" + points[i] + "'");
    }
  }
}

// Warshall on row bitmasks.
void close_transitively(std::vector<Mask>& up) {
  const std::size_t n = up.size();
  for (PointIndex k = 0; k < n; ++k) {
    for (PointIndex i = 0; i < n; ++i) {
      if (up[i] & bit(k)) up[i] |= up[k];
    }
  }
}

std::vector<Mask> transpose(const std::vector<Mask>& up) {
  std::vector<Mask> down(up.size(), 0);
  for (PointIndex x = 0; x < up.size(); ++x) {
    for_each_bit(up[x], [&](PointIndex y) { down[y] |= bit(x); });
  }
  return down;
}

}  // namespace

FiniteSpace FiniteSpace::from_up_sets(std::vector<std::string> points, std::vector<Mask> up) {
  FiniteSpace s;
  index_points(points, s.index_);
  if (up.size() != points.size()) {
    throw PreconditionFailed("one up-set per point required");
  }
  const Mask all = full_mask(points.size());
  for (PointIndex x = 0; x < up.size(); ++x) {
    if ((up[x] & bit(x)) == 0 || (up[x] & ~all) != 0) {
      throw PreconditionFailed("up-set of '" + points[x] + "' is not reflexive or out of range");
    }
    Mask reach = 0;
    for_each_bit(up[x], [&](PointIndex y) { reach |= up[y]; });
    if (reach != up[x]) {
      throw PreconditionFailed("up-set of '" + points[x] + "' is not transitively closed");
    }
  }
  s.points_ = std::move(points);
  s.down_ = transpose(up);
  s.up_ = std::move(up);
  return s;
}

std::optional<PointIndex> FiniteSpace::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex FiniteSpace::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownPoint("unknown point '" + std::string(id) + "'");
}

PointSet FiniteSpace::set_of(std::initializer_list<std::string_view> ids) const {
  Mask m = 0;
  for (auto id : ids) m |= bit(index_of(id));
  return {size(), m};
}

std::vector<std::string> FiniteSpace::names_of(const PointSet& s) const {
  std::vector<std::string> out;
  for_each_bit(s.bits(), [&](PointIndex i) { out.push_back(points_.at(i)); });
  return out;
}

FiniteSpace build_space_indexed(std::vector<std::string> points,
                                std::span<const std::pair<PointIndex, PointIndex>> arrows) {
  std::unordered_map<std::string, PointIndex> scratch;
  index_points(points, scratch);
  std::vector<Mask> up(points.size());
  for (PointIndex i = 0; i < points.size(); ++i) up[i] = bit(i);
  for (auto [from, to] : arrows) {
    if (from >= points.size() || to >= points.size()) {
      throw InvalidSpace(InvalidSpace::Kind::unknown_endpoint, "arrow endpoint out of range");
    }
    up[from] |= bit(to);
  }
  close_transitively(up);
  return FiniteSpace::from_up_sets(std::move(points), std::move(up));
}

FiniteSpace build_space(std::vector<std::string> points, std::span<const Arrow> arrows) {
  std::unordered_map<std::string, PointIndex> index;
  index_points(points, index);
  std::vector<std::pair<PointIndex, PointIndex>> indexed;
  indexed.reserve(arrows.size());
  for (const auto& [from, to] : arrows) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end() || t == index.end()) {
      const auto& missing = f == index.end() ? from : to;
      throw InvalidSpace(InvalidSpace::Kind::unknown_endpoint,
                         "arrow " + from + " -> " + to + " names unknown point '" + missing + "'");
    }
    indexed.emplace_back(f->second, t->second);
  }
  return build_space_indexed(std::move(points), indexed);
}

FiniteSpace build_space(std::vector<std::string> points, std::initializer_list<Arrow> arrows) {
  return build_space(std::move(points), std::span<const Arrow>(arrows.begin(), arrows.size()));
}

PointSet sp(const FiniteSpace& space, PointIndex x) {
  if (x >= space.size()) throw UnknownPoint("point index out of range");
  return {space.size(), space.up(x)};
}

PointSet gen(const FiniteSpace& space, PointIndex x) {
  if (x >= space.size()) throw UnknownPoint("point index out of range");
  return {space.size(), space.down(x)};
}

bool is_t0(const FiniteSpace& space) {
  for (PointIndex x = 0; x < space.size(); ++x) {
    if ((space.up(x) & space.down(x)) != bit(x)) return false;
  }
  return true;
}

T0Quotient t0_quotient(const FiniteSpace& space) {
  const std::size_t n = space.size();
  T0Quotient q;
  q.map.assign(n, 0);
  std::vector<std::string> names;
  for (PointIndex x = 0; x < n; ++x) {
    const Mask cls = space.up(x) & space.down(x);
    const auto first = static_cast<PointIndex>(std::countr_zero(cls));
    if (first == x) {
      q.map[x] = names.size();
      q.representative.push_back(x);
      names.push_back(space.name(x));
    } else {
      q.map[x] = q.map[first];
    }
  }
  std::vector<Mask> up(names.size(), 0);
  for (PointIndex c = 0; c < names.size(); ++c) {
    for_each_bit(space.up(q.representative[c]), [&](PointIndex y) { up[c] |= bit(q.map[y]); });
  }
  q.space = FiniteSpace::from_up_sets(std::move(names), std::move(up));
  return q;
}

PointSet closure(const FiniteSpace& space, const PointSet& s) {
  Mask m = 0;
  for_each_bit(s.bits(), [&](PointIndex x) { m |= space.up(x); });
  return {space.size(), m};
}

bool is_closed(const FiniteSpace& space, const PointSet& s) {
  return closure(space, s) == s;
}

bool is_irreducible(const FiniteSpace& space, const PointSet& s) {
  bool found = false;
  for_each_bit(s.bits(), [&](PointIndex x) {
    if ((s.bits() & ~space.up(x)) == 0) found = true;
  });
  return found;
}

PointSet initial_points(const FiniteSpace& space, const PointSet& s) {
  Mask out = 0;
  for_each_bit(s.bits(), [&](PointIndex x) {
    // every z in s with z -> x must satisfy x -> z
    if ((space.down(x) & s.bits() & ~space.up(x)) == 0) out |= bit(x);
  });
  return {space.size(), out};
}

PointSet final_points(const FiniteSpace& space, const PointSet& s) {
  Mask out = 0;
  for_each_bit(s.bits(), [&](PointIndex x) {
    if ((space.up(x) & s.bits() & ~space.down(x)) == 0) out |= bit(x);
  });
  return {space.size(), out};
}

PointSet closed_points(const FiniteSpace& space) {
  Mask out = 0;
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (space.up(x) == bit(x)) out |= bit(x);
  }
  return {space.size(), out};
}

std::vector<PointSet> irreducible_components(const FiniteSpace& space) {
  std::vector<PointSet> out;
  const PointSet generic = initial_points(space, space.whole());
  for_each_bit(generic.bits(), [&](PointIndex x) {
    PointSet c = sp(space, x);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  });
  return out;
}

void for_each_closed_subset(const FiniteSpace& space, std::size_t limit,
                            const std::function<void(const PointSet&)>& fn) {
  const std::size_t n = space.size();
  if (n > limit || n >= 63) {
    throw LimitExceeded("closed-subset enumeration refused: " + std::to_string(n) +
                        " points exceeds the limit of " + std::to_string(limit));
  }
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) {
    bool closed = true;
    for (PointIndex x = 0; x < n && closed; ++x) {
      if ((m & bit(x)) && (space.up(x) & ~m)) closed = false;
    }
    if (closed) fn(PointSet(n, m));
  }
}

UipVerdict has_uip(const FiniteSpace& space, std::size_t limit) {
  UipVerdict v;
  v.fast_criterion = is_t0(space);

  if (space.size() > limit) {
    v.holds = v.fast_criterion;
    if (!v.holds) {
      for (PointIndex x = 0; x < space.size(); ++x) {
        if ((space.up(x) & space.down(x)) != bit(x)) {
          v.witness = sp(space, x);
          break;
        }
      }
    }
    return v;
  }

  v.enumerated = true;
  v.holds = true;
  std::map<Mask, Mask> owner;  // initial point -> the set it generates
  for_each_closed_subset(space, limit, [&](const PointSet& c) {
    if (!v.holds || !is_irreducible(space, c)) return;
    const PointSet init = initial_points(space, c);
    if (init.size() != 1) {
      v.holds = false;
      v.witness = c;
      return;
    }
    auto [it, inserted] = owner.emplace(init.bits(), c.bits());
    if (!inserted && it->second != c.bits()) {
      v.holds = false;
      v.distinct_clause_fired = true;
      v.witness = c;
    }
  });
  return v;
}

}  // namespace specorder
