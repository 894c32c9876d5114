#include "specorder/lengths.hpp"

#include <algorithm>
#include <numeric>

namespace specorder {

namespace {

// Linear extension of the strict order: a strictly below b implies
// down(a) is a proper subset of down(b).
std::vector<PointIndex> by_down_size(const std::vector<Mask>& down, Mask within) {
  std::vector<PointIndex> order;
  for_each_bit(within, [&](PointIndex x) { order.push_back(x); });
  std::stable_sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return std::popcount(down[a] & within) < std::popcount(down[b] & within);
  });
  return order;
}

void require_point(const FiniteSpace& space, PointIndex x) {
  if (x >= space.size()) throw UnknownPoint("point index out of range");
}

}  // namespace

LengthTable::LengthTable(const FiniteSpace& space)
    : n_(space.size()), up_(space.up_sets()), down_(space.down_sets()), table_(n_ * n_, -1) {
  const auto order = by_down_size(down_, full_mask(n_));
  // Fill rows from the top of the order down, so every strict successor w of
  // x already has its row when x is processed.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const PointIndex x = *it;
    const Mask strict_up = up_[x] & ~down_[x];
    for_each_bit(up_[x], [&](PointIndex y) {
      if (down_[x] & bit(y)) {
        table_[x * n_ + y] = 0;
        return;
      }
      int best = 0;
      for_each_bit(strict_up & down_[y], [&](PointIndex w) {
        best = std::max(best, 1 + table_[w * n_ + y]);
      });
      table_[x * n_ + y] = best;
    });
  }
}

std::size_t LengthTable::between(PointIndex x, PointIndex y) const {
  if (x >= n_ || y >= n_) throw UnknownPoint("point index out of range");
  const int v = raw(x, y);
  if (v < 0) throw NotSpecialization("not a specialization");
  return static_cast<std::size_t>(v);
}

RestrictSeries LengthTable::witness(PointIndex x, PointIndex y) const {
  const int total = static_cast<int>(between(x, y));
  RestrictSeries s;
  s.chain.push_back(x);
  PointIndex cur = x;
  for (int remaining = total; remaining > 0; --remaining) {
    const Mask candidates = up_[cur] & ~down_[cur] & down_[y];
    PointIndex next = n_;
    for_each_bit(candidates, [&](PointIndex w) {
      if (next == n_ && table_[w * n_ + y] == remaining - 1) next = w;
    });
    s.chain.push_back(next);
    cur = next;
  }
  if (total > 0) s.chain.back() = y;
  return s;
}

std::size_t LengthTable::of_point(PointIndex x) const {
  if (x >= n_) throw UnknownPoint("point index out of range");
  int best = 0;
  for_each_bit(up_[x], [&](PointIndex y) { best = std::max(best, table_[x * n_ + y]); });
  return static_cast<std::size_t>(best);
}

bool is_closest(const FiniteSpace& space, PointIndex x, PointIndex y) {
  require_point(space, x);
  require_point(space, y);
  if (!space.leq(x, y)) {
    throw NotSpecialization(space.name(y) + " is not a specialization of " + space.name(x));
  }
  const Mask between = space.up(x) & space.down(y);
  const Mask allowed = (space.up(x) & space.down(x)) | (space.up(y) & space.down(y));
  return (between & ~allowed) == 0;
}

LengthReport length_between(const FiniteSpace& space, PointIndex x, PointIndex y) {
  require_point(space, x);
  require_point(space, y);
  if (!space.leq(x, y)) {
    throw NotSpecialization(space.name(y) + " is not a specialization of " + space.name(x));
  }
  LengthTable table(space);
  return {table.between(x, y), table.witness(x, y)};
}

LengthReport length_of_space(const FiniteSpace& space, const LengthTable& table) {
  return length_of_subset(space, table, space.whole());
}

LengthReport length_of_space(const FiniteSpace& space) {
  return length_of_space(space, LengthTable(space));
}

LengthReport length_of_subset(const FiniteSpace& space, const LengthTable& table,
                              const PointSet& s) {
  LengthReport best;
  bool found = false;
  for_each_bit(s.bits(), [&](PointIndex x) {
    for_each_bit(space.up(x) & s.bits(), [&](PointIndex y) {
      const auto v = static_cast<std::size_t>(table.raw(x, y));
      if (!found || v > best.value) {
        found = true;
        best.value = v;
        best.witness = table.witness(x, y);
      }
    });
  });
  return best;
}

LengthReport length_of_subset(const FiniteSpace& space, const PointSet& s) {
  return length_of_subset(space, LengthTable(space), s);
}

LengthReport length_of_point(const FiniteSpace& space, PointIndex x) {
  require_point(space, x);
  return length_of_subset(space, sp(space, x));
}

std::size_t dim_space(const FiniteSpace& space, const PointSet& s) {
  const auto& down = space.down_sets();
  std::vector<std::size_t> height(space.size(), 0);
  std::size_t best = 0;
  for (PointIndex x : by_down_size(down, s.bits())) {
    std::size_t h = 0;
    for_each_bit(down[x] & s.bits() & ~space.up(x),
                 [&](PointIndex w) { h = std::max(h, height[w] + 1); });
    height[x] = h;
    best = std::max(best, h);
  }
  return best;
}

RestrictSeries presentation(const FiniteSpace& space) {
  if (space.empty()) throw PreconditionFailed("the empty space has no presentation");
  return length_of_space(space).witness;
}

bool validate_restrict_series(const FiniteSpace& space, const RestrictSeries& series) {
  const auto& c = series.chain;
  if (c.empty()) return false;
  for (PointIndex p : c) {
    if (p >= space.size()) return false;
  }
  if (space.equivalent(c.front(), c.back())) return c.size() == 1;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!space.strictly_less(c[i], c[i + 1])) return false;
  }
  return true;
}

}  // namespace specorder
