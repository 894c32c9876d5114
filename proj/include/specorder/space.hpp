#pragma once

// Finite topological spaces represented by their specialization preorder.
//
// A point y is a specialization of x (written x -> y) when y lies in the
// closure of {x}. For a finite space the preorder determines the topology:
// closed sets are exactly the subsets closed under specialization.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specorder/error.hpp"

namespace specorder {

using PointIndex = std::size_t;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kDefaultEnumerationLimit = 16;

inline constexpr Mask bit(PointIndex i) { return Mask{1} << i; }

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Calls fn(i) for every set bit of m, lowest first.
template <class Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const auto i = static_cast<PointIndex>(std::countr_zero(m));
    fn(i);
    m &= m - 1;
  }
}

/// Subset of the points of one space.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t universe, Mask bits);

  static PointSet none(std::size_t universe) { return {universe, 0}; }
  static PointSet all(std::size_t universe) { return {universe, full_mask(universe)}; }
  static PointSet of(std::size_t universe, std::initializer_list<PointIndex> points);

  std::size_t universe() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(PointIndex i) const noexcept { return i < universe_ && (bits_ & bit(i)) != 0; }
  bool is_subset_of(const PointSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<PointIndex> indices() const;

  PointSet operator|(const PointSet& o) const { return {universe_, bits_ | o.bits_}; }
  PointSet operator&(const PointSet& o) const { return {universe_, bits_ & o.bits_}; }
  PointSet operator-(const PointSet& o) const { return {universe_, bits_ & ~o.bits_}; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t universe_ = 0;
  Mask bits_ = 0;
};

/// A finite set of named points with a specialization preorder, stored
/// fully closed: leq(x, y) answers x -> y in constant time.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Builds a space from explicit up-sets. up[x] must contain x and be
  /// transitively closed; throws InvalidSpace otherwise.
  static FiniteSpace from_up_sets(std::vector<std::string> points, std::vector<Mask> up);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& name(PointIndex x) const { return points_.at(x); }

  std::optional<PointIndex> find(std::string_view id) const;
  /// Throws UnknownPoint.
  PointIndex index_of(std::string_view id) const;

  /// x -> y: y lies in the closure of {x}.
  bool leq(PointIndex x, PointIndex y) const noexcept { return (up_[x] & bit(y)) != 0; }
  /// x <-> y: generic specialization.
  bool equivalent(PointIndex x, PointIndex y) const noexcept { return leq(x, y) && leq(y, x); }
  /// x -> y but not y -> x.
  bool strictly_less(PointIndex x, PointIndex y) const noexcept { return leq(x, y) && !leq(y, x); }

  Mask up(PointIndex x) const noexcept { return up_[x]; }
  Mask down(PointIndex x) const noexcept { return down_[x]; }
  const std::vector<Mask>& up_sets() const noexcept { return up_; }
  const std::vector<Mask>& down_sets() const noexcept { return down_; }

  PointSet whole() const { return PointSet::all(size()); }
  PointSet set_of(std::initializer_list<std::string_view> ids) const;
  std::vector<std::string> names_of(const PointSet& s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, PointIndex> index_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

using Arrow = std::pair<std::string, std::string>;

/// Reflexive-transitive closure of the generating arrows. Point order is
/// preserved. Throws InvalidSpace on duplicate ids, unknown endpoints, or
/// more than kMaxPoints points.
FiniteSpace build_space(std::vector<std::string> points, std::span<const Arrow> arrows);
FiniteSpace build_space(std::vector<std::string> points, std::initializer_list<Arrow> arrows);
FiniteSpace build_space_indexed(std::vector<std::string> points,
                                std::span<const std::pair<PointIndex, PointIndex>> arrows);

PointSet sp(const FiniteSpace& space, PointIndex x);
PointSet gen(const FiniteSpace& space, PointIndex x);

bool is_t0(const FiniteSpace& space);

struct T0Quotient {
  FiniteSpace space;
  /// Source point -> index of its class in `space`. Each class is named
  /// after its first member in input order.
  std::vector<PointIndex> map;
  /// Quotient point -> representative source point.
  std::vector<PointIndex> representative;
};

T0Quotient t0_quotient(const FiniteSpace& space);

/// Closure of a subset: the union of Sp(x) over its members.
PointSet closure(const FiniteSpace& space, const PointSet& s);
bool is_closed(const FiniteSpace& space, const PointSet& s);

/// A subspace of a finite space is irreducible exactly when it is nonempty
/// and contained in Sp(x) for one of its own points x.
bool is_irreducible(const FiniteSpace& space, const PointSet& s);

/// Maximal irreducible closed subsets, ordered by their first generic point.
std::vector<PointSet> irreducible_components(const FiniteSpace& space);

PointSet initial_points(const FiniteSpace& space, const PointSet& s);
PointSet final_points(const FiniteSpace& space, const PointSet& s);

/// Points x with Sp(x) = {x}.
PointSet closed_points(const FiniteSpace& space);

/// Calls fn for every closed subset, in increasing mask order. Throws
/// LimitExceeded when the space has more than `limit` points.
void for_each_closed_subset(const FiniteSpace& space, std::size_t limit,
                            const std::function<void(const PointSet&)>& fn);

struct UipVerdict {
  bool holds = false;
  /// Irreducible closed set with a number of initial points other than one,
  /// or sharing its initial point with another such set.
  std::optional<PointSet> witness;
  /// False when the space was larger than the enumeration limit and only the
  /// T0 criterion was evaluated.
  bool enumerated = false;
  /// Verdict of the T0 criterion; equals `holds` whenever `enumerated`.
  bool fast_criterion = false;
  /// Set when two distinct irreducible closed sets shared an initial point
  /// while every set individually had exactly one.
  bool distinct_clause_fired = false;
};

/// Checks that every irreducible closed subset has exactly one initial
/// point, and that distinct such subsets have distinct initial points.
UipVerdict has_uip(const FiniteSpace& space, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace specorder
