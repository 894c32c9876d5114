#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "specorder/catalog.hpp"
#include "specorder/space.hpp"

using namespace specorder;
using namespace fixtures;

namespace {

std::vector<std::string> names(const FiniteSpace& s, const PointSet& p) { return s.names_of(p); }
using Names = std::vector<std::string>;

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("build_space closes the generating arrows") {
    const FiniteSpace a = a3();
    for (PointIndex x = 0; x < 3; ++x) {
      for (PointIndex y = 0; y < 3; ++y) CHECK(a.leq(x, y) == (x == y));
    }
    const FiniteSpace c = ch2();
    CHECK(c.leq(c.index_of("x0"), c.index_of("x2")));
    CHECK_FALSE(c.leq(c.index_of("x2"), c.index_of("x0")));

    const FiniteSpace k = kst();
    const auto expected = oracle::warshall(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(oracle::relation_of(k) == expected);
    CHECK(k.leq(k.index_of("e2"), k.index_of("m")));
    CHECK(k.points() == Names{"e2", "ht", "hs", "m"});
  }

  TEST_CASE("build_space rejects malformed input") {
    CHECK_THROWS_AS(build_space({"a", "a"}, {}), InvalidSpace);
    CHECK_THROWS_AS(build_space({"a"}, {{"a", "z"}}), InvalidSpace);
    try {
      build_space({"a"}, {{"a", "z"}});
    } catch (const InvalidSpace& e) {
      CHECK(e.kind() == InvalidSpace::Kind::unknown_endpoint);
    }
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back("p" + std::to_string(i));
    CHECK_THROWS_AS(build_space(many, {}), InvalidSpace);
  }

  TEST_CASE("random closures agree with Warshall") {
    Rng rng(derive_seed(11, 0));
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng.below(9);
      std::vector<std::string> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back("v" + std::to_string(i));
      std::vector<std::pair<PointIndex, PointIndex>> arrows;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && rng.below(5) == 0) arrows.emplace_back(i, j);
        }
      }
      const FiniteSpace s = build_space_indexed(pts, arrows);
      CHECK(oracle::relation_of(s) == oracle::warshall(n, arrows));
    }
  }

  TEST_CASE("sp and gen") {
    const FiniteSpace c = ch2();
    CHECK(names(c, sp(c, c.index_of("x0"))) == Names{"x0", "x1", "x2"});
    CHECK(names(c, gen(c, c.index_of("x2"))) == Names{"x0", "x1", "x2"});
    const FiniteSpace a = a3();
    CHECK(names(a, sp(a, a.index_of("a"))) == Names{"a"});
    CHECK(names(a, gen(a, a.index_of("b"))) == Names{"b"});
    const FiniteSpace k = kst();
    CHECK(names(k, sp(k, k.index_of("ht"))) == Names{"ht", "m"});
    CHECK(names(k, gen(k, k.index_of("m"))) == Names{"e2", "ht", "hs", "m"});
    CHECK_THROWS_AS(k.index_of("zz"), UnknownPoint);
  }

  TEST_CASE("T0 detection and quotient") {
    CHECK(is_t0(ch2()));
    CHECK(is_t0(kst()));
    CHECK_FALSE(is_t0(nont0()));

    const T0Quotient q = t0_quotient(nont0());
    CHECK(q.space.points() == Names{"x"});
    CHECK(q.map == std::vector<PointIndex>{0, 0});

    const T0Quotient same = t0_quotient(ch2());
    CHECK(same.space == ch2());
    CHECK(same.map == std::vector<PointIndex>{0, 1, 2});

    const FiniteSpace abc = build_space({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    const T0Quotient r = t0_quotient(abc);
    CHECK(r.space.points() == Names{"a", "c"});
    CHECK(r.space.strictly_less(0, 1));
    CHECK(r.map == std::vector<PointIndex>{0, 0, 1});
  }

  TEST_CASE("closed sets") {
    const FiniteSpace c = ch2();
    CHECK(is_closed(c, c.set_of({"x2"})));
    CHECK_FALSE(is_closed(c, c.set_of({"x0"})));
    const FiniteSpace k = kst();
    CHECK(is_closed(k, k.set_of({"ht", "m"})));
    CHECK(closure(k, k.set_of({"ht", "hs"})) == k.set_of({"ht", "hs", "m"}));
  }

  TEST_CASE("closed subsets of KST match a brute-force count") {
    // The four-point square has six up-closed subsets: {}, {m}, {ht,m},
    // {hs,m}, {ht,hs,m} and the whole space.
    const FiniteSpace k = kst();
    std::size_t count = 0;
    for_each_closed_subset(k, kDefaultEnumerationLimit, [&](const PointSet&) { ++count; });
    CHECK(count == oracle::closed_subsets(oracle::relation_of(k), full_mask(4)).size());
    CHECK(count == 6);
  }

  TEST_CASE("irreducible components") {
    const FiniteSpace a = a3();
    const auto ca = irreducible_components(a);
    REQUIRE(ca.size() == 3);
    CHECK(names(a, ca[0]) == Names{"a"});
    CHECK(names(a, ca[1]) == Names{"b"});
    CHECK(names(a, ca[2]) == Names{"c"});
    const FiniteSpace k = kst();
    const auto ck = irreducible_components(k);
    REQUIRE(ck.size() == 1);
    CHECK(ck[0] == k.whole());
    const FiniteSpace v = v_tree();
    REQUIRE(irreducible_components(v).size() == 1);
  }

  TEST_CASE("irreducibility agrees with the union-of-closed-sets definition") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for_each_space(n, false, [&](const FiniteSpace& s) {
        const auto m = oracle::relation_of(s);
        const auto closed = oracle::closed_subsets(m, full_mask(n));
        for (Mask c : closed) CHECK(is_irreducible(s, PointSet(n, c)) == oracle::irreducible_closed(c, closed));

        PointSet cover = PointSet::none(n);
        const auto comps = irreducible_components(s);
        for (const PointSet& c : comps) {
          CHECK(is_closed(s, c));
          CHECK(is_irreducible(s, c));
          cover = cover | c;
          for (Mask d : closed) {
            if (oracle::irreducible_closed(d, closed)) CHECK_FALSE(((c.bits() & ~d) == 0 && c.bits() != d));
          }
        }
        CHECK(cover == s.whole());
      });
    }
  }

  TEST_CASE("initial and final points") {
    const FiniteSpace c = ch2();
    CHECK(names(c, initial_points(c, c.whole())) == Names{"x0"});
    CHECK(names(c, final_points(c, c.whole())) == Names{"x2"});
    const FiniteSpace a = a3();
    CHECK(names(a, initial_points(a, a.whole())) == Names{"a", "b", "c"});
    CHECK(names(a, final_points(a, a.whole())) == Names{"a", "b", "c"});
    const FiniteSpace k = kst();
    CHECK(names(k, initial_points(k, k.set_of({"ht", "hs", "m"}))) == Names{"ht", "hs"});
    CHECK(names(k, final_points(k, k.whole())) == Names{"m"});
    CHECK(names(k, closed_points(k)) == Names{"m"});
  }

  TEST_CASE("UIP") {
    CHECK(has_uip(ch2()).holds);
    CHECK(has_uip(kst()).holds);
    const UipVerdict bad = has_uip(nont0());
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == nont0().whole());
    CHECK(bad.enumerated);
  }

  TEST_CASE("UIP holds exactly for T0 spaces") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for_each_space(n, false, [&](const FiniteSpace& s) {
        const UipVerdict v = has_uip(s);
        CHECK(v.holds == is_t0(s));
        CHECK(v.holds == v.fast_criterion);
        CHECK_FALSE(v.distinct_clause_fired);
        if (!v.holds) {
          REQUIRE(v.witness);
          CHECK(is_closed(s, *v.witness));
          CHECK(is_irreducible(s, *v.witness));
          CHECK(initial_points(s, *v.witness).size() != 1);
        }
      });
    }
  }

  TEST_CASE("UIP refuses enumeration above the limit") {
    std::vector<std::string> pts;
    for (int i = 0; i < 20; ++i) pts.push_back("p" + std::to_string(i));
    const FiniteSpace big = build_space(pts, {});
    const UipVerdict v = has_uip(big, 16);
    CHECK_FALSE(v.enumerated);
    CHECK(v.holds);
    CHECK_THROWS_AS(for_each_closed_subset(big, 16, [](const PointSet&) {}), LimitExceeded);
  }

  TEST_CASE("order and closure properties") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for_each_space(n, false, [&](const FiniteSpace& s) {
        for (PointIndex x = 0; x < n; ++x) {
          CHECK(is_closed(s, sp(s, x)));
          CHECK(is_irreducible(s, sp(s, x)));
          CHECK((gen(s, x) & sp(s, x)).contains(x));
          for (PointIndex y = 0; y < n; ++y) {
            CHECK(s.leq(x, y) == sp(s, y).is_subset_of(sp(s, x)));
            CHECK(s.equivalent(x, y) == (sp(s, x) == sp(s, y)));
          }
        }
        const T0Quotient q = t0_quotient(s);
        CHECK(is_t0(q.space));
        const T0Quotient qq = t0_quotient(q.space);
        CHECK(qq.space == q.space);
        std::vector<bool> hit(q.space.size(), false);
        for (PointIndex c : q.map) hit[c] = true;
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      });
    }
  }

  TEST_CASE("antichains have every point initial and final") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto s = std::get<FiniteSpace>(build_fixture(FixtureId{FixtureId::Kind::antichain, {n}, {}}));
      CHECK(initial_points(s, s.whole()) == s.whole());
      CHECK(final_points(s, s.whole()) == s.whole());
    }
  }
}
