#include "specorder/checks.hpp"

namespace specorder {

namespace {

bool irreducible_space(const FiniteSpace& space) {
  return !space.empty() && is_irreducible(space, space.whole());
}

}  // namespace

CheckResult check_length_equals_dim(const FiniteSpace& space) {
  CheckResult r;
  if (!is_t0(space)) {
    r.detail = "space is not T0";
    return r;
  }
  r.applicable = true;
  const auto l = length_of_space(space).value;
  const auto d = dim_space(space);
  r.consistent = l == d;
  if (!r.consistent) r.detail = "l(E) = " + std::to_string(l) + " but dim E = " + std::to_string(d);
  return r;
}

CheckResult check_subset_length_bound(const FiniteSpace& space, const PointSet& subset) {
  CheckResult r;
  r.applicable = true;
  const auto l = length_of_subset(space, subset).value;
  const auto d = dim_space(space, subset);
  r.consistent = l >= d;
  if (!r.consistent) r.detail = "l(S) = " + std::to_string(l) + " < dim S = " + std::to_string(d);
  return r;
}

CheckResult check_ip_equivalence(const SpaceMap& f, std::size_t limit) {
  CheckResult r;
  if (f.source().size() > limit) {
    r.detail = "source exceeds the closed-subset enumeration limit";
    return r;
  }
  r.applicable = true;
  const bool sp_pres = is_specialization_preserving(f).holds;
  const bool ip_pres = is_ip_preserving(f, limit).holds;
  r.consistent = sp_pres == ip_pres;
  if (!r.consistent) {
    r.detail = std::string("specialization-preserving = ") + (sp_pres ? "true" : "false") +
               " but IP-preserving = " + (ip_pres ? "true" : "false");
  }
  return r;
}

NormBoundResult check_norm_bound(const SpaceMap& f) {
  NormBoundResult r;
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  if (!satisfies_condition_star(f).holds) {
    r.detail = "Condition (*) fails";
    return r;
  }
  r.applicable = true;
  const NormReport n = norm(f);
  r.norm = n.value;
  for (const PointSet& c : irreducible_components(f.source())) {
    r.component_norms.push_back(norm_on(f, c).value);
  }
  r.consistent = n.value <= Ratio(1);
  if (!r.consistent) {
    const auto [x1, x2] = *n.witness_pair;
    r.detail = "norm " + to_string(n.value) + " > 1 attained at " + f.source().name(x1) + " -> " +
               f.source().name(x2);
  }
  return r;
}

NormBoundResult check_injective_norm(const SpaceMap& f) {
  NormBoundResult r;
  if (!f.is_injective()) {
    r.detail = "map is not injective";
    return r;
  }
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  if (!satisfies_condition_star(f).holds) {
    r.detail = "Condition (*) fails";
    return r;
  }
  if (dim_space(f.source()) < 1) {
    r.detail = "source has dimension 0";
    return r;
  }
  r.applicable = true;
  const NormReport n = norm(f);
  r.norm = n.value;
  r.consistent = n.value == Ratio(1);
  if (!r.consistent) {
    const auto [x1, x2] = *n.witness_pair;
    r.detail = "injective map has norm " + to_string(n.value) + " (attained at " +
               f.source().name(x1) + " -> " + f.source().name(x2) + ")";
  }
  return r;
}

NormBoundResult check_length_preserving_norm(const SpaceMap& f) {
  NormBoundResult r;
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  if (dim_space(f.source()) == 0) {
    r.detail = "source has dimension 0";
    return r;
  }
  if (!is_length_preserving(f).holds) {
    r.detail = "map is not length-preserving";
    return r;
  }
  r.applicable = true;
  r.norm = norm(f).value;
  r.consistent = r.norm == Ratio(1);
  if (!r.consistent) r.detail = "length-preserving map has norm " + to_string(r.norm);
  return r;
}

SurjectiveNormResult check_surjective_norm(const SpaceMap& f) {
  SurjectiveNormResult r;
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  r.surjective = f.is_surjective();
  r.source_dim = dim_space(f.source());
  r.target_dim = dim_space(f.target());
  r.norm = norm(f).value;
  r.norm_ge_one = r.norm >= Ratio(1);
  if (!r.surjective) {
    r.detail = "map is not surjective";
    return r;
  }
  if (r.source_dim != r.target_dim) {
    r.detail = "dimensions differ (" + std::to_string(r.source_dim) + " vs " +
               std::to_string(r.target_dim) + ")";
    return r;
  }
  r.applicable = true;
  r.consistent = r.norm_ge_one;
  if (!r.consistent) r.detail = "surjective map between equal dimensions has norm " + to_string(r.norm);
  return r;
}

InjectivityResult injectivity_criterion(const SpaceMap& f) {
  InjectivityResult r;
  if (!is_t0(f.source()) || !is_t0(f.target())) {
    r.detail = "source or target is not T0";
    return r;
  }
  if (!irreducible_space(f.source()) || !irreducible_space(f.target())) {
    r.detail = "source or target is not irreducible";
    return r;
  }
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  if (!satisfies_condition_star(f).holds) {
    r.detail = "Condition (*) fails";
    return r;
  }
  r.applicable = true;
  r.injective = f.is_injective();
  r.length_preserving = is_length_preserving(f).holds;
  r.level_separated = classify_levels(f).separated;
  r.consistent = r.injective == (r.length_preserving && r.level_separated);
  if (!r.consistent) {
    r.detail = std::string("injective = ") + (r.injective ? "true" : "false") +
               ", length-preserving = " + (r.length_preserving ? "true" : "false") +
               ", level-separated = " + (r.level_separated ? "true" : "false");
  }
  return r;
}

DimEqualityResult dim_equality_check(const SpaceMap& f) {
  DimEqualityResult r;
  if (!irreducible_space(f.source()) || !irreducible_space(f.target())) {
    r.detail = "source or target is not irreducible";
    return r;
  }
  if (!is_specialization_preserving(f).holds) {
    r.detail = "map is not specialization-preserving";
    return r;
  }
  r.applicable = true;
  r.length_preserving = is_length_preserving(f).holds;
  r.chain_lifting = is_chain_lifting(f, LiftScope::whole_target).holds;
  r.source_dim = dim_space(f.source());
  r.target_dim = dim_space(f.target());
  r.dims_equal = r.source_dim == r.target_dim;
  r.consistent = !(r.length_preserving && r.chain_lifting) || r.dims_equal;
  if (!r.consistent) {
    r.detail = "length-preserving and chain-lifting but dim " + std::to_string(r.source_dim) +
               " != " + std::to_string(r.target_dim);
  }
  return r;
}

}  // namespace specorder
