#include "specorder/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

namespace specorder {

namespace {

constexpr std::array<std::size_t, 16> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                      23, 29, 31, 37, 41, 43, 47, 53};

struct KindName {
  FixtureId::Kind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<KindName, 10> kKinds = {{
    {FixtureId::Kind::antichain, "antichain", 1},
    {FixtureId::Kind::chain, "chain", 1},
    {FixtureId::Kind::spec_kt, "spec_kt", 1},
    {FixtureId::Kind::spec_kst, "spec_kst", 1},
    {FixtureId::Kind::spec_z, "spec_z", 1},
    {FixtureId::Kind::spec_zt, "spec_zt", 2},
    {FixtureId::Kind::v_tree, "v_tree", 0},
    {FixtureId::Kind::proj_kst_kt, "proj_kst_kt", 0},
    {FixtureId::Kind::embed_kt_zt, "embed_kt_zt", 0},
    {FixtureId::Kind::const_map, "const_map", 1},
}};

const KindName& kind_info(FixtureId::Kind k) {
  return *std::find_if(kKinds.begin(), kKinds.end(), [&](const KindName& e) { return e.kind == k; });
}

// "t", "t-1", "t-2", ...
std::string linear(std::string_view var, std::size_t c) {
  std::string out(var);
  if (c != 0) out += "-" + std::to_string(c);
  return out;
}

std::string ideal(std::initializer_list<std::string> gens) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : gens) {
    if (!first) out += ",";
    out += g;
    first = false;
  }
  return out + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionFailed(what);
}

FiniteSpace make_antichain(std::size_t n) {
  require(n >= 1 && n <= kMaxPoints, "antichain(n) needs 1 <= n <= 64");
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  return build_space(std::move(pts), {});
}

FiniteSpace make_chain(std::size_t n) {
  require(n >= 1 && n + 1 <= kMaxPoints, "chain(n) needs 1 <= n <= 63");
  std::vector<std::string> pts;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i <= n; ++i) {
    pts.push_back("x" + std::to_string(i));
    if (i > 0) arrows.emplace_back(pts[i - 1], pts[i]);
  }
  return build_space(std::move(pts), arrows);
}

FiniteSpace make_spec_kt(std::size_t n) {
  require(n >= 1 && n + 1 <= kMaxPoints, "spec_kt(n) needs 1 <= n <= 63");
  std::vector<std::string> pts{"(0)"};
  std::vector<Arrow> arrows;
  for (std::size_t c = 0; c < n; ++c) {
    pts.push_back(ideal({linear("t", c)}));
    arrows.emplace_back("(0)", pts.back());
  }
  return build_space(std::move(pts), arrows);
}

FiniteSpace make_spec_kst(std::size_t n) {
  require(n >= 1 && 1 + 2 * n + n * n <= kMaxPoints, "spec_kst(n) needs 1 <= n <= 6");
  std::vector<std::string> pts{"(0)"};
  std::vector<Arrow> arrows;
  for (std::size_t b = 0; b < n; ++b) {
    pts.push_back(ideal({linear("t", b)}));
    arrows.emplace_back("(0)", pts.back());
  }
  for (std::size_t a = 0; a < n; ++a) {
    pts.push_back(ideal({linear("s", a)}));
    arrows.emplace_back("(0)", pts.back());
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      pts.push_back(ideal({linear("s", a), linear("t", b)}));
      arrows.emplace_back(ideal({linear("s", a)}), pts.back());
      arrows.emplace_back(ideal({linear("t", b)}), pts.back());
    }
  }
  return build_space(std::move(pts), arrows);
}

FiniteSpace make_spec_z(std::size_t n) {
  require(n >= 1 && n <= kSmallPrimes.size(), "spec_z(n) needs 1 <= n <= 16");
  std::vector<std::string> pts{"(0)"};
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(ideal({std::to_string(kSmallPrimes[i])}));
    arrows.emplace_back("(0)", pts.back());
  }
  return build_space(std::move(pts), arrows);
}

// Maximal ideals (p, t-c) are identified modulo p, so containments among the
// chosen representatives are exact.
FiniteSpace make_spec_zt(std::size_t n, std::size_t m) {
  require(n >= 1 && n <= kSmallPrimes.size() && m >= 1, "spec_zt(n,m) needs 1 <= n <= 16, m >= 1");
  std::vector<std::string> pts{"(0)"};
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(ideal({std::to_string(kSmallPrimes[i])}));
    arrows.emplace_back("(0)", pts.back());
  }
  for (std::size_t c = 0; c < m; ++c) {
    pts.push_back(ideal({linear("t", c)}));
    arrows.emplace_back("(0)", pts.back());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = kSmallPrimes[i];
    const std::string prime = ideal({std::to_string(p)});
    for (std::size_t r = 0; r < std::min(p, m); ++r) {
      pts.push_back(ideal({std::to_string(p), linear("t", r)}));
      arrows.emplace_back(prime, pts.back());
      for (std::size_t c = r; c < m; c += p) arrows.emplace_back(ideal({linear("t", c)}), pts.back());
    }
  }
  require(pts.size() <= kMaxPoints, "spec_zt(n,m) exceeds 64 points");
  return build_space(std::move(pts), arrows);
}

FiniteSpace make_v_tree() {
  return build_space({"r", "u", "v"}, {{"r", "u"}, {"r", "v"}});
}

// Contraction of a prime of k[s,t] to k[t].
SpaceMap make_proj_kst_kt() {
  return SpaceMap::from_names(make_spec_kst(1), make_spec_kt(1),
                              {{"(0)", "(0)"}, {"(t)", "(t)"}, {"(s)", "(0)"}, {"(s,t)", "(t)"}});
}

// Contraction of a prime of Q[t] to Z[t]: (t) meets Z[t] in the height-one
// prime (t), not in a maximal ideal.
SpaceMap make_embed_kt_zt() {
  return SpaceMap::from_names(make_spec_kt(1), make_spec_zt(2, 1), {{"(0)", "(0)"}, {"(t)", "(t)"}});
}

SpaceMap make_const_map(const std::string& point) {
  FiniteSpace ch = make_chain(2);
  const PointIndex target = ch.find(point).value_or(ch.size());
  require(target < ch.size(), "const_map(p) needs p in {x0, x1, x2}");
  FiniteSpace src = ch;
  return {std::move(src), std::move(ch), std::vector<PointIndex>(3, target)};
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
          "bad fixture parameter '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string FixtureId::to_string() const {
  const auto& info = kind_info(kind);
  std::string out(info.name);
  if (kind == Kind::const_map) return out + "(" + point + ")";
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

FixtureId FixtureId::parse(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  const std::string_view name = trim(text.substr(0, open));
  const auto it = std::find_if(kKinds.begin(), kKinds.end(),
                               [&](const KindName& k) { return k.name == name; });
  require(it != kKinds.end(), "unknown fixture '" + std::string(text) + "'");

  std::vector<std::string_view> args;
  if (open != std::string_view::npos) {
    require(text.back() == ')', "unterminated fixture parameters in '" + std::string(text) + "'");
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (true) {
      const auto comma = inner.find(',');
      args.push_back(trim(inner.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  require(args.size() == it->arity, "fixture '" + std::string(name) + "' takes " +
                                        std::to_string(it->arity) + " parameter(s)");
  FixtureId id;
  id.kind = it->kind;
  if (id.kind == Kind::const_map) {
    id.point = std::string(args[0]);
  } else {
    for (auto a : args) id.params.push_back(parse_count(a));
  }
  return id;
}

std::vector<FixtureInfo> list_fixtures() {
  return {
      {"antichain(n)", "n isolated points; Artinian scheme, every point initial and final (Example 1.1)"},
      {"chain(n)", "chain x0 -> ... -> xn of length n"},
      {"spec_kt(n)", "Spec k[t]: generic point and n closed points"},
      {"spec_kst(n)", "Spec k[s,t]: generic point, 2n lines, n*n closed points"},
      {"spec_z(n)", "Spec Z: generic point and the first n primes"},
      {"spec_zt(n,m)", "Spec Z[t]: generic point, n primes, m linear primes, maximal ideals above them"},
      {"v_tree", "root r with two specializations u, v"},
      {"proj_kst_kt", "Spec k[s,t] -> Spec k[t] from k[t] in k[s,t], norm 1 (Example 3.2(ii))"},
      {"embed_kt_zt", "Spec Q[t] -> Spec Z[t] from Z[t] in Q[t]; claimed norm 2 (Example 3.2(iii)), computed value reported as-is"},
      {"const_map(p)", "constant map chain(2) -> chain(2) onto p, norm 0 (Example 3.2(i))"},
  };
}

std::string fixture_name(const FixtureId& id) { return id.to_string(); }

std::pair<std::string, std::string> map_fixture_endpoints(const FixtureId& id) {
  switch (id.kind) {
    case FixtureId::Kind::proj_kst_kt: return {"spec_kst(1)", "spec_kt(1)"};
    case FixtureId::Kind::embed_kt_zt: return {"spec_kt(1)", "spec_zt(2,1)"};
    case FixtureId::Kind::const_map: return {"chain(2)", "chain(2)"};
    default: break;
  }
  throw PreconditionFailed(id.to_string() + " is not a map fixture");
}

Fixture build_fixture(const FixtureId& id) {
  using K = FixtureId::Kind;
  require(id.params.size() == kind_info(id.kind).arity || id.kind == K::const_map,
          "wrong number of fixture parameters");
  switch (id.kind) {
    case K::antichain: return make_antichain(id.params[0]);
    case K::chain: return make_chain(id.params[0]);
    case K::spec_kt: return make_spec_kt(id.params[0]);
    case K::spec_kst: return make_spec_kst(id.params[0]);
    case K::spec_z: return make_spec_z(id.params[0]);
    case K::spec_zt: return make_spec_zt(id.params[0], id.params[1]);
    case K::v_tree: return make_v_tree();
    case K::proj_kst_kt: return make_proj_kst_kt();
    case K::embed_kt_zt: return make_embed_kt_zt();
    case K::const_map: return make_const_map(id.point);
  }
  throw PreconditionFailed("unknown fixture kind");
}

void for_each_space(std::size_t n, bool t0_only, const std::function<void(const FiniteSpace&)>& fn) {
  if (n > kMaxEnumeratedPoints) {
    throw LimitExceeded("space enumeration is limited to " + std::to_string(kMaxEnumeratedPoints) +
                        " points");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));

  // Point k is added with a down-closed set D of points below it and an
  // up-closed set U above it; D x U must already be related. Each preorder
  // on n points arises exactly once.
  std::vector<Mask> up(n, 0);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      fn(FiniteSpace::from_up_sets(names, up));
      return;
    }
    std::vector<Mask> down(k, 0);
    for (PointIndex x = 0; x < k; ++x) for_each_bit(up[x], [&](PointIndex y) { down[y] |= bit(x); });
    const Mask end = Mask{1} << k;
    for (Mask d = 0; d < end; ++d) {
      bool down_closed = true;
      for_each_bit(d, [&](PointIndex x) { down_closed = down_closed && (down[x] & ~d) == 0; });
      if (!down_closed) continue;
      for (Mask u = 0; u < end; ++u) {
        if (t0_only && (d & u)) continue;
        bool ok = true;
        for_each_bit(u, [&](PointIndex x) { ok = ok && (up[x] & ~u) == 0; });
        for_each_bit(d, [&](PointIndex x) { ok = ok && (u & ~up[x]) == 0; });
        if (!ok) continue;
        const auto saved = up;
        up[k] = bit(k) | u;
        for_each_bit(d, [&](PointIndex x) { up[x] |= up[k]; });
        self(self, k + 1);
        up = saved;
      }
    }
  };
  extend(extend, 0);
}

std::vector<FiniteSpace> enumerate_spaces(std::size_t n, bool t0_only) {
  std::vector<FiniteSpace> out;
  for_each_space(n, t0_only, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

namespace {

void check_guard(const FiniteSpace& src, const FiniteSpace& tgt, std::uint64_t guard) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (tgt.size() != 0 && count > guard / tgt.size()) {
      throw LimitExceeded("map enumeration refused: more than " + std::to_string(guard) +
                          " candidate maps");
    }
    count *= tgt.size();
  }
  if (count > guard) {
    throw LimitExceeded("map enumeration refused: more than " + std::to_string(guard) +
                        " candidate maps");
  }
}

std::vector<PointIndex> linear_extension(const FiniteSpace& s) {
  std::vector<PointIndex> order(s.size());
  for (PointIndex i = 0; i < s.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return std::popcount(s.down(a)) < std::popcount(s.down(b));
  });
  return order;
}

// Targets compatible with the images already chosen for `assigned`.
Mask compatible(const FiniteSpace& src, const FiniteSpace& tgt, const std::vector<PointIndex>& image,
                Mask assigned, PointIndex x) {
  Mask allowed = full_mask(tgt.size());
  for_each_bit(assigned & src.down(x), [&](PointIndex y) { allowed &= tgt.up(image[y]); });
  for_each_bit(assigned & src.up(x), [&](PointIndex y) { allowed &= tgt.down(image[y]); });
  return allowed;
}

}  // namespace

void for_each_monotone_map(const FiniteSpace& src, const FiniteSpace& tgt,
                           const std::function<void(const SpaceMap&)>& fn, std::uint64_t guard) {
  check_guard(src, tgt, guard);
  const auto order = linear_extension(src);
  std::vector<PointIndex> image(src.size(), 0);
  auto place = [&](auto&& self, std::size_t i, Mask assigned) -> void {
    if (i == order.size()) {
      fn(SpaceMap(src, tgt, image));
      return;
    }
    const PointIndex x = order[i];
    for_each_bit(compatible(src, tgt, image, assigned, x), [&](PointIndex t) {
      image[x] = t;
      self(self, i + 1, assigned | bit(x));
    });
  };
  place(place, 0, 0);
}

std::vector<SpaceMap> enumerate_monotone_maps(const FiniteSpace& src, const FiniteSpace& tgt,
                                              std::uint64_t guard) {
  std::vector<SpaceMap> out;
  for_each_monotone_map(src, tgt, [&](const SpaceMap& f) { out.push_back(f); }, guard);
  return out;
}

void for_each_total_map(const FiniteSpace& src, const FiniteSpace& tgt,
                        const std::function<void(const SpaceMap&)>& fn, std::uint64_t guard) {
  check_guard(src, tgt, guard);
  if (tgt.empty() && !src.empty()) return;
  std::vector<PointIndex> image(src.size(), 0);
  while (true) {
    fn(SpaceMap(src, tgt, image));
    std::size_t i = image.size();
    while (i > 0) {
      --i;
      if (++image[i] < tgt.size()) break;
      image[i] = 0;
      if (i == 0) return;
    }
    if (image.empty()) return;
  }
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionFailed("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = 0;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

bool Rng::chance(const Ratio& p) {
  return below(static_cast<std::uint64_t>(p.denominator())) < static_cast<std::uint64_t>(p.numerator());
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FiniteSpace random_space(const GeneratorConfig& cfg) {
  require(cfg.num_points <= kMaxPoints, "num_points must be at most 64");
  require(cfg.edge_probability >= Ratio(0) && cfg.edge_probability <= Ratio(1),
          "edge_probability must lie in [0, 1]");
  require(!(cfg.require_irreducible && cfg.num_points == 0), "the empty space is not irreducible");

  const std::size_t n = cfg.num_points;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));

  Rng rng(cfg.seed);
  for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::vector<PointIndex> order(n);
    for (PointIndex i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<std::pair<PointIndex, PointIndex>> arrows;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || (cfg.require_t0 && j < i)) continue;
        if (rng.chance(cfg.edge_probability)) arrows.emplace_back(order[i], order[j]);
      }
    }
    FiniteSpace s = build_space_indexed(names, arrows);
    if (!cfg.require_irreducible || is_irreducible(s, s.whole())) return s;
  }
  throw LimitExceeded("random_space: irreducibility retry budget exhausted");
}

SpaceMap random_monotone_map(const FiniteSpace& src, const FiniteSpace& tgt, Rng& rng) {
  require(!(tgt.empty() && !src.empty()), "no map into the empty space");
  const auto order = linear_extension(src);
  std::vector<PointIndex> image(src.size(), 0);
  auto place = [&](auto&& self, std::size_t i, Mask assigned) -> bool {
    if (i == order.size()) return true;
    const PointIndex x = order[i];
    std::vector<PointIndex> options;
    for_each_bit(compatible(src, tgt, image, assigned, x), [&](PointIndex t) { options.push_back(t); });
    for (std::size_t k = options.size(); k > 1; --k) std::swap(options[k - 1], options[rng.below(k)]);
    for (PointIndex t : options) {
      image[x] = t;
      if (self(self, i + 1, assigned | bit(x))) return true;
    }
    return false;
  };
  place(place, 0, 0);
  return {src, tgt, std::move(image)};
}

SpaceMap random_total_map(const FiniteSpace& src, const FiniteSpace& tgt, Rng& rng) {
  require(!(tgt.empty() && !src.empty()), "no map into the empty space");
  std::vector<PointIndex> image(src.size(), 0);
  for (auto& y : image) y = rng.below(tgt.size());
  return {src, tgt, std::move(image)};
}

}  // namespace specorder
