#pragma once

// Lengths of specializations.
//
// A restrict series from x to y is a chain x = x0 -> x1 -> ... -> xn = y in
// which no step goes back (x_{i+1} -> x_i fails), or the single point [x]
// when x <-> y. The length l(x, y) is the longest such series. All lengths
// are computed on the strict part of the preorder, which is the same as
// working on the T0 quotient.

#include <cstddef>
#include <vector>

#include "specorder/space.hpp"

namespace specorder {

struct RestrictSeries {
  std::vector<PointIndex> chain;

  /// Number of arrows; zero for an empty or single-point chain.
  std::size_t length() const noexcept { return chain.empty() ? 0 : chain.size() - 1; }
  PointIndex front() const { return chain.front(); }
  PointIndex back() const { return chain.back(); }

  friend bool operator==(const RestrictSeries&, const RestrictSeries&) = default;
};

struct LengthReport {
  std::size_t value = 0;
  RestrictSeries witness;
};

/// All-pairs l(x, y) for one space, computed once in O(n^3).
///
/// Witness chains are the lexicographically smallest maximum chains with
/// respect to input point order, with the endpoints replaced by the exact
/// query points.
class LengthTable {
 public:
  explicit LengthTable(const FiniteSpace& space);

  std::size_t size() const noexcept { return n_; }

  /// l(x, y); throws NotSpecialization unless x -> y.
  std::size_t between(PointIndex x, PointIndex y) const;
  /// l(x, y), or -1 when x -> y fails.
  int raw(PointIndex x, PointIndex y) const noexcept { return table_[x * n_ + y]; }

  RestrictSeries witness(PointIndex x, PointIndex y) const;

  /// l(x): the ambient length of Sp(x), i.e. the longest series leaving x.
  std::size_t of_point(PointIndex x) const;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<int> table_;
};

/// True iff no z with x -> z -> y is strictly between x and y (up to <->).
bool is_closest(const FiniteSpace& space, PointIndex x, PointIndex y);

LengthReport length_between(const FiniteSpace& space, PointIndex x, PointIndex y);

/// l(E). Zero for antichains and for the empty space (whose witness is
/// the empty chain).
LengthReport length_of_space(const FiniteSpace& space);
LengthReport length_of_space(const FiniteSpace& space, const LengthTable& table);

LengthReport length_of_point(const FiniteSpace& space, PointIndex x);

/// Longest ambient l(x, y) over x, y in s; intermediate points of the
/// witness may lie outside s.
LengthReport length_of_subset(const FiniteSpace& space, const PointSet& s);
LengthReport length_of_subset(const FiniteSpace& space, const LengthTable& table, const PointSet& s);

/// Krull dimension of the subspace s: the longest strict chain whose points
/// all lie in s.
std::size_t dim_space(const FiniteSpace& space, const PointSet& s);
inline std::size_t dim_space(const FiniteSpace& space) { return dim_space(space, space.whole()); }

/// A restrict series of length l(E). Throws PreconditionFailed when empty.
RestrictSeries presentation(const FiniteSpace& space);

bool validate_restrict_series(const FiniteSpace& space, const RestrictSeries& series);

}  // namespace specorder
