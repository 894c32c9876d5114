#pragma once

// Consistency checkers for the statements relating lengths, dimensions and
// norms. Each checker evaluates the hypotheses and both sides of its claim
// independently and reports:
//   applicable  - the hypotheses hold for this input,
//   consistent  - the claim holds (always true when not applicable).
// A hypothesis-violating input is therefore never confused with a
// counterexample.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specorder/morphism.hpp"

namespace specorder {

struct CheckResult {
  bool applicable = false;
  bool consistent = true;
  /// Why the check was inapplicable, or what disagreed.
  std::string detail;
};

/// l(E) = dim E on spaces with the (UIP) property (equivalently T0).
CheckResult check_length_equals_dim(const FiniteSpace& space);

/// l(S) >= dim S for a subset S measured with ambient lengths.
CheckResult check_subset_length_bound(const FiniteSpace& space, const PointSet& subset);

/// Specialization-preserving iff IP-preserving.
CheckResult check_ip_equivalence(const SpaceMap& f, std::size_t limit = kDefaultEnumerationLimit);

struct NormBoundResult : CheckResult {
  Ratio norm{0};
  /// Norm restricted to each irreducible component of the source.
  std::vector<Ratio> component_norms;
};

/// Specialization-preserving and Condition (*) imply norm <= 1.
NormBoundResult check_norm_bound(const SpaceMap& f);

/// Injective, Condition (*), source dimension >= 1 imply norm = 1.
NormBoundResult check_injective_norm(const SpaceMap& f);

/// Source dimension > 0 and length-preserving imply norm = 1.
NormBoundResult check_length_preserving_norm(const SpaceMap& f);

struct SurjectiveNormResult : CheckResult {
  bool surjective = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Ratio norm{0};
  bool norm_ge_one = false;
};

/// Equal finite dimensions and surjective imply norm >= 1.
SurjectiveNormResult check_surjective_norm(const SpaceMap& f);

struct InjectivityResult : CheckResult {
  bool injective = false;
  bool length_preserving = false;
  bool level_separated = false;
};

/// For irreducible T0 spaces and a map satisfying Condition (*):
/// injective iff (length-preserving and level-separated).
InjectivityResult injectivity_criterion(const SpaceMap& f);

struct DimEqualityResult : CheckResult {
  bool length_preserving = false;
  bool chain_lifting = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool dims_equal = false;
};

/// For irreducible spaces: length-preserving and chain-lifting imply equal
/// dimensions.
DimEqualityResult dim_equality_check(const SpaceMap& f);

}  // namespace specorder
