#include "specorder/morphism.hpp"

#include <set>
#include <unordered_map>

namespace specorder {

std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<PointIndex> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) {
    throw PreconditionFailed("map must assign an image to every source point");
  }
  for (PointIndex y : image_) {
    if (y >= target_.size()) throw PreconditionFailed("image point outside the target space");
  }
}

SpaceMap SpaceMap::from_names(FiniteSpace source, FiniteSpace target,
                              const std::vector<std::pair<std::string, std::string>>& assignments) {
  std::vector<PointIndex> image(source.size(), 0);
  Mask assigned = 0;
  for (const auto& [from, to] : assignments) {
    const PointIndex x = source.index_of(from);
    if (assigned & bit(x)) throw PreconditionFailed("point '" + from + "' assigned twice");
    assigned |= bit(x);
    image[x] = target.index_of(to);
  }
  if (assigned != full_mask(source.size())) {
    const auto missing = static_cast<PointIndex>(std::countr_zero(~assigned));
    throw PreconditionFailed("map is not total: '" + source.name(missing) + "' has no image");
  }
  return {std::move(source), std::move(target), std::move(image)};
}

PointSet SpaceMap::image_of(const PointSet& s) const {
  Mask m = 0;
  for_each_bit(s.bits(), [&](PointIndex x) { m |= bit(image_[x]); });
  return {target_.size(), m};
}

PointSet SpaceMap::preimage_of(const PointSet& t) const {
  Mask m = 0;
  for (PointIndex x = 0; x < image_.size(); ++x) {
    if (t.contains(image_[x])) m |= bit(x);
  }
  return {source_.size(), m};
}

bool SpaceMap::is_injective() const {
  Mask seen = 0;
  for (PointIndex y : image_) {
    if (seen & bit(y)) return false;
    seen |= bit(y);
  }
  return true;
}

bool SpaceMap::is_surjective() const {
  return image_of(source_.whole()).bits() == full_mask(target_.size());
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.target() == g.source())) throw PreconditionFailed("maps are not composable");
  std::vector<PointIndex> image(f.source().size());
  for (PointIndex x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return {f.source(), g.target(), std::move(image)};
}

namespace {

void require_preserving(const SpaceMap& f) {
  const Verdict v = is_specialization_preserving(f);
  if (!v.holds) {
    const auto x = v.witness.points[0];
    const auto y = v.witness.points[1];
    throw NotSpecializationPreserving(
        "map is not specialization-preserving: " + f.source().name(x) + " -> " +
            f.source().name(y) + " but not " + f.target().name(f(x)) + " -> " +
            f.target().name(f(y)),
        x, y);
  }
}

}  // namespace

Verdict is_specialization_preserving(const SpaceMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (PointIndex x = 0; x < src.size(); ++x) {
    for (PointIndex y = 0; y < src.size(); ++y) {
      if (src.leq(x, y) && !tgt.leq(f(x), f(y))) return {false, {{x, y}, std::nullopt}};
    }
  }
  return {};
}

Verdict is_ip_preserving(const SpaceMap& f, std::size_t limit) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  Verdict v;
  for_each_closed_subset(src, limit, [&](const PointSet& u) {
    if (!v.holds) return;
    for_each_bit(initial_points(src, u).bits(), [&](PointIndex x0) {
      if (!v.holds) return;
      const PointSet component = sp(src, x0) & u;
      const PointSet image_closure = closure(tgt, f.image_of(component));
      if (image_closure != sp(tgt, f(x0))) v = {false, {{x0}, u}};
    });
  });
  return v;
}

bool sp_connected(const FiniteSpace& space, PointIndex x, PointIndex y) {
  if (x >= space.size() || y >= space.size()) throw UnknownPoint("point index out of range");
  return space.leq(x, y) || space.leq(y, x);
}

bool sp_connected_set(const FiniteSpace& space, const PointSet& s) {
  if (s.empty()) throw PreconditionFailed("Sp-connectedness of the empty set is undefined");
  bool chain = true;
  for_each_bit(s.bits(), [&](PointIndex x) {
    if ((s.bits() & ~(space.up(x) | space.down(x))) != 0) chain = false;
  });
  return chain;
}

Verdict satisfies_condition_star(const SpaceMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (PointIndex x = 0; x < src.size(); ++x) {
    const PointSet target_closure = sp(tgt, f(x));
    if (f.image_of(sp(src, x)) == target_closure) continue;
    if (sp_connected_set(src, f.preimage_of(target_closure))) continue;
    return {false, {{x}, f.preimage_of(target_closure)}};
  }
  return {};
}

NormReport norm_on(const SpaceMap& f, const PointSet& within) {
  require_preserving(f);
  const auto& src = f.source();
  const LengthTable ls(src);
  const LengthTable lt(f.target());
  NormReport r;
  for_each_bit(within.bits(), [&](PointIndex x1) {
    for_each_bit(src.up(x1) & within.bits(), [&](PointIndex x2) {
      const int denom = ls.raw(x1, x2);
      if (denom <= 0) return;
      const Ratio ratio(lt.raw(f(x1), f(x2)), denom);
      if (!r.witness_pair || ratio > r.value) {
        r.value = ratio;
        r.witness_pair = std::pair{x1, x2};
      }
    });
  });
  r.beta = r.value;
  return r;
}

NormReport norm(const SpaceMap& f) { return norm_on(f, f.source().whole()); }

Verdict is_length_preserving(const SpaceMap& f) {
  require_preserving(f);
  const auto& src = f.source();
  const LengthTable ls(src);
  const LengthTable lt(f.target());
  Verdict v;
  int longest = -1;
  for (PointIndex x = 0; x < src.size(); ++x) {
    for_each_bit(src.up(x), [&](PointIndex y) {
      if (ls.raw(x, y) != lt.raw(f(x), f(y)) && ls.raw(x, y) > longest) {
        longest = ls.raw(x, y);
        v = {false, {{x, y}, std::nullopt}};
      }
    });
  }
  return v;
}

LevelClassification classify_levels(const SpaceMap& f) {
  require_preserving(f);
  const auto& src = f.source();
  const auto& tgt = f.target();
  const LengthTable ls(src);
  LevelClassification c;
  for (PointIndex x = 0; x < src.size(); ++x) {
    for (PointIndex y = x + 1; y < src.size(); ++y) {
      if (sp_connected(src, x, y) || ls.of_point(x) != ls.of_point(y)) continue;
      if (sp_connected(tgt, f(x), f(y))) {
        if (c.separated) c.separated_counterexample = std::pair{x, y};
        c.separated = false;
      } else {
        if (c.reduced) c.reduced_counterexample = std::pair{x, y};
        c.reduced = false;
      }
    }
  }
  c.mixed = !c.separated && !c.reduced;
  return c;
}

Verdict is_chain_lifting(const SpaceMap& f, LiftScope scope) {
  require_preserving(f);
  const auto& src = f.source();
  const auto& tgt = f.target();
  const Mask in_scope = scope == LiftScope::whole_target
                            ? full_mask(tgt.size())
                            : closure(tgt, f.image_of(src.whole())).bits();

  std::vector<Mask> fibre(tgt.size(), 0);
  for (PointIndex x = 0; x < src.size(); ++x) fibre[f(x)] |= bit(x);

  // Every restrict series is a subsequence of a saturated chain that starts
  // at an initial point of the scope, and subsequences of lifted chains lift.
  // So it suffices to walk cover steps from the initial points, carrying the
  // set of source points a lifted chain can currently end at.
  std::vector<Mask> covers(tgt.size(), 0);
  for (PointIndex y = 0; y < tgt.size(); ++y) {
    if (!(in_scope & bit(y))) continue;
    const Mask strict = tgt.up(y) & ~tgt.down(y) & in_scope;
    for_each_bit(strict, [&](PointIndex z) {
      const Mask mid = strict & tgt.down(z) & ~tgt.up(z);
      if (mid == 0) covers[y] |= bit(z);
    });
  }

  std::set<std::pair<PointIndex, Mask>> seen;
  std::vector<PointIndex> path;
  std::optional<std::vector<PointIndex>> failure;

  auto walk = [&](auto&& self, PointIndex y, Mask ends) -> void {
    if (failure) return;
    path.push_back(y);
    if (ends == 0) {
      failure = path;
    } else if (seen.emplace(y, ends).second) {
      for_each_bit(covers[y], [&](PointIndex z) {
        Mask reach = 0;
        for_each_bit(ends, [&](PointIndex x) { reach |= src.up(x); });
        self(self, z, reach & fibre[z]);
      });
    }
    path.pop_back();
  };

  const PointSet starts = initial_points(tgt, PointSet(tgt.size(), in_scope));
  for_each_bit(starts.bits(), [&](PointIndex y) { walk(walk, y, fibre[y]); });

  if (failure) return {false, {*failure, std::nullopt}};
  return {};
}

ClassificationReport classify(const SpaceMap& f, std::size_t limit) {
  ClassificationReport r;
  const Verdict pres = is_specialization_preserving(f);
  r.specialization_preserving = pres.holds;
  if (!pres.holds) r.counterexamples["specialization_preserving"] = pres.witness;
  require_preserving(f);

  if (f.source().size() <= limit) {
    const Verdict ip = is_ip_preserving(f, limit);
    r.ip_checked = true;
    r.ip_preserving = ip.holds;
    if (!ip.holds) r.counterexamples["ip_preserving"] = ip.witness;
  }

  const Verdict star = satisfies_condition_star(f);
  r.condition_star = star.holds;
  if (!star.holds) r.counterexamples["condition_star"] = star.witness;

  const Verdict lp = is_length_preserving(f);
  r.length_preserving = lp.holds;
  if (!lp.holds) r.counterexamples["length_preserving"] = lp.witness;

  r.norm = norm(f);
  r.asymptotic = r.norm.value == Ratio(1);
  r.null = r.norm.value == Ratio(0);
  Witness norm_witness;
  if (r.norm.witness_pair) norm_witness.points = {r.norm.witness_pair->first, r.norm.witness_pair->second};
  if (!r.asymptotic) r.counterexamples["asymptotic"] = norm_witness;
  if (!r.null) r.counterexamples["null"] = norm_witness;

  const LevelClassification levels = classify_levels(f);
  r.level_separated = levels.separated;
  r.level_reduced = levels.reduced;
  r.level_mixed = levels.mixed;
  auto pair_witness = [](const std::optional<std::pair<PointIndex, PointIndex>>& p) {
    Witness w;
    if (p) w.points = {p->first, p->second};
    return w;
  };
  if (!levels.separated) r.counterexamples["level_separated"] = pair_witness(levels.separated_counterexample);
  if (!levels.reduced) r.counterexamples["level_reduced"] = pair_witness(levels.reduced_counterexample);
  if (!levels.mixed) {
    r.counterexamples["level_mixed"] = levels.separated
                                           ? pair_witness(levels.reduced_counterexample)
                                           : pair_witness(levels.separated_counterexample);
  }

  r.injective = f.is_injective();
  if (!r.injective) {
    std::unordered_map<PointIndex, PointIndex> first;
    for (PointIndex x = 0; x < f.source().size(); ++x) {
      auto [it, inserted] = first.emplace(f(x), x);
      if (!inserted) {
        r.counterexamples["injective"] = Witness{{it->second, x}, std::nullopt};
        break;
      }
    }
  }

  const Verdict lift = is_chain_lifting(f, LiftScope::whole_target);
  r.chain_lifting = lift.holds;
  if (!lift.holds) r.counterexamples["chain_lifting"] = lift.witness;
  const Verdict image_lift = is_chain_lifting(f, LiftScope::image_closure);
  r.image_chain_lifting = image_lift.holds;
  if (!image_lift.holds) r.counterexamples["image_chain_lifting"] = image_lift.witness;
  return r;
}

}  // namespace specorder
