#pragma once

// Named fixtures (finite truncations of classical spectra and the example
// morphisms between them) and the exhaustive and random generators used by
// the verification campaigns.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <utility>
#include <vector>

#include "specorder/morphism.hpp"
#include "specorder/space.hpp"

namespace specorder {

struct FixtureId {
  enum class Kind {
    antichain,
    chain,
    spec_kt,
    spec_kst,
    spec_z,
    spec_zt,
    v_tree,
    proj_kst_kt,
    embed_kt_zt,
    const_map,
  };

  Kind kind = Kind::antichain;
  std::vector<std::size_t> params;
  /// Only used by const_map: the target point of chain(2).
  std::string point;

  /// Canonical textual form, e.g. "spec_zt(2,1)" or "const_map(x2)".
  std::string to_string() const;
  /// Throws PreconditionFailed on unknown ids or malformed parameters.
  static FixtureId parse(std::string_view text);
};

struct FixtureInfo {
  std::string id;
  std::string description;
};

std::vector<FixtureInfo> list_fixtures();

using Fixture = std::variant<FiniteSpace, SpaceMap>;

/// Throws PreconditionFailed when parameters are out of bounds.
Fixture build_fixture(const FixtureId& id);

/// Name under which a fixture is serialized.
std::string fixture_name(const FixtureId& id);

/// Fixture names of the source and target of a map fixture, e.g.
/// {"spec_kst(1)", "spec_kt(1)"} for proj_kst_kt.
std::pair<std::string, std::string> map_fixture_endpoints(const FixtureId& id);

inline constexpr std::size_t kMaxEnumeratedPoints = 5;
inline constexpr std::uint64_t kDefaultMapGuard = 1'000'000;

/// Every labeled reflexive-transitive relation on n points named p0..p{n-1}
/// (antisymmetric ones only when t0_only). Throws LimitExceeded for n > 5.
void for_each_space(std::size_t n, bool t0_only, const std::function<void(const FiniteSpace&)>& fn);
std::vector<FiniteSpace> enumerate_spaces(std::size_t n, bool t0_only);

/// Every specialization-preserving total map src -> tgt, generated by
/// backtracking in a linear extension of src. Throws LimitExceeded when
/// |tgt|^|src| exceeds `guard`.
void for_each_monotone_map(const FiniteSpace& src, const FiniteSpace& tgt,
                           const std::function<void(const SpaceMap&)>& fn,
                           std::uint64_t guard = kDefaultMapGuard);
std::vector<SpaceMap> enumerate_monotone_maps(const FiniteSpace& src, const FiniteSpace& tgt,
                                              std::uint64_t guard = kDefaultMapGuard);

/// Every total map src -> tgt, in lexicographic order of images.
void for_each_total_map(const FiniteSpace& src, const FiniteSpace& tgt,
                        const std::function<void(const SpaceMap&)>& fn,
                        std::uint64_t guard = kDefaultMapGuard);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t num_points = 0;
  Ratio edge_probability{1, 4};
  bool require_t0 = true;
  bool require_irreducible = false;
  std::size_t max_retries = 1000;
};

/// Deterministic source of randomness whose output does not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool chance(const Ratio& p);

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a campaign seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Arrows are sampled along a random linear order (both directions when
/// require_t0 is false) and transitively closed. Throws PreconditionFailed
/// on an invalid config and LimitExceeded when the irreducibility retry
/// budget runs out.
FiniteSpace random_space(const GeneratorConfig& cfg);

/// A random specialization-preserving map; one always exists since constant
/// maps are monotone. Throws PreconditionFailed when tgt is empty and src is not.
SpaceMap random_monotone_map(const FiniteSpace& src, const FiniteSpace& tgt, Rng& rng);

SpaceMap random_total_map(const FiniteSpace& src, const FiniteSpace& tgt, Rng& rng);

}  // namespace specorder
