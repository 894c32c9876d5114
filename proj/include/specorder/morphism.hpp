#pragma once

// Maps between finite spaces and the morphism-level notions built on
// lengths: preservation properties, the norm, and the longitudinal and
// latitudinal classifications.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "specorder/lengths.hpp"
#include "specorder/space.hpp"

namespace specorder {

using Ratio = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Ratio& r);

/// Total map from the points of one finite space into another.
class SpaceMap {
 public:
  SpaceMap() = default;
  /// Throws PreconditionFailed unless `image` has one in-range entry per
  /// source point.
  SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<PointIndex> image);

  /// Builds the map from (source point, target point) name pairs. Every
  /// source point must appear exactly once.
  static SpaceMap from_names(FiniteSpace source, FiniteSpace target,
                             const std::vector<std::pair<std::string, std::string>>& assignments);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  const std::vector<PointIndex>& image() const noexcept { return image_; }
  PointIndex operator()(PointIndex x) const { return image_.at(x); }

  PointSet image_of(const PointSet& s) const;
  PointSet preimage_of(const PointSet& t) const;

  bool is_injective() const;
  bool is_surjective() const;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<PointIndex> image_;
};

/// g after f. Requires f.target() == g.source().
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

struct Witness {
  std::vector<PointIndex> points;
  std::optional<PointSet> set;
};

/// Outcome of a yes/no check. When `holds` is false the witness names the
/// offending source points (and, for set-level checks, the offending set).
struct Verdict {
  bool holds = true;
  Witness witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Thrown by operations that need f(x) -> f(y) for every x -> y.
class NotSpecializationPreserving : public PreconditionFailed {
 public:
  NotSpecializationPreserving(const std::string& what, PointIndex x, PointIndex y)
      : PreconditionFailed(what), pair_(x, y) {}

  std::pair<PointIndex, PointIndex> pair() const noexcept { return pair_; }

 private:
  std::pair<PointIndex, PointIndex> pair_;
};

/// f(x) -> f(y) for every x -> y. On finite spaces this is continuity.
/// Witness: the first failing pair in index order.
Verdict is_specialization_preserving(const SpaceMap& f);

/// For every closed U and every initial point x0 of U, f(x0) is the
/// generic point of the closure of f applied to the component of U that x0
/// generates. Witness: x0, with U as the set.
Verdict is_ip_preserving(const SpaceMap& f, std::size_t limit = kDefaultEnumerationLimit);

bool sp_connected(const FiniteSpace& space, PointIndex x, PointIndex y);
/// Every pair of members is Sp-connected, i.e. s is a specialization chain.
/// Throws PreconditionFailed on the empty set.
bool sp_connected_set(const FiniteSpace& space, const PointSet& s);

/// For every x: f(Sp(x)) = Sp(f(x)), or the preimage of Sp(f(x)) is
/// Sp-connected. Witness: the first failing x.
Verdict satisfies_condition_star(const SpaceMap& f);

struct NormReport {
  Ratio value{0};
  std::optional<std::pair<PointIndex, PointIndex>> witness_pair;
  bool bounded = true;
  Ratio beta{0};
};

/// Supremum of l(f(x1), f(x2)) / l(x1, x2) over x1 -> x2 with
/// l(x1, x2) > 0; zero when the source has dimension zero.
NormReport norm(const SpaceMap& f);

/// Same supremum restricted to pairs inside `within`.
NormReport norm_on(const SpaceMap& f, const PointSet& within);

/// l(x, y) = l(f(x), f(y)) for every x -> y. The witness is the longest
/// failing specialization, first in point order among equals.
Verdict is_length_preserving(const SpaceMap& f);

struct LevelClassification {
  bool separated = true;
  bool reduced = true;
  bool mixed = false;
  /// Pair whose images are Sp-connected (breaks `separated`).
  std::optional<std::pair<PointIndex, PointIndex>> separated_counterexample;
  /// Pair whose images are Sp-disconnected (breaks `reduced`).
  std::optional<std::pair<PointIndex, PointIndex>> reduced_counterexample;
};

/// Looks at Sp-disconnected pairs with l(x) = l(y). With no such pair both
/// `separated` and `reduced` are true.
LevelClassification classify_levels(const SpaceMap& f);

enum class LiftScope {
  /// Restrict series lying in the closure of f(X).
  image_closure,
  /// Every restrict series of the target.
  whole_target,
};

/// Every restrict series y0 -> ... -> yn in scope lifts to a restrict series
/// x0 -> ... -> xn of the source with f(x_i) = y_i. Witness: the chain that
/// fails to lift, as target points.
Verdict is_chain_lifting(const SpaceMap& f, LiftScope scope = LiftScope::whole_target);

struct ClassificationReport {
  bool specialization_preserving = false;
  bool ip_preserving = false;
  bool ip_checked = false;
  bool condition_star = false;
  bool length_preserving = false;
  bool asymptotic = false;
  bool null = false;
  bool level_separated = false;
  bool level_reduced = false;
  bool level_mixed = false;
  bool injective = false;
  bool chain_lifting = false;
  bool image_chain_lifting = false;
  NormReport norm;
  /// Failed flag name -> witness.
  std::map<std::string, Witness> counterexamples;
};

/// Full classification. Throws NotSpecializationPreserving when the
/// length-based notions are undefined.
ClassificationReport classify(const SpaceMap& f, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace specorder
