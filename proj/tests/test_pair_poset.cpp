#include <doctest.h>

#include <algorithm>
#include <set>

#include "cochar/pair_poset.hpp"
#include "helpers.hpp"

using namespace cochar;
using namespace cochar::testutil;

TEST_CASE("pair validation") {
  RootDatum gl4 = gl(4);
  CHECK(validate_pair(gl4, {levi({0, 2}), iv({1, 1, 0, 0})}));
  CHECK_FALSE(validate_pair(gl4, {levi({0, 2}), iv({0, 1, 1, 0})}));  // not dominant
  RootDatum rd = res(2, 2);
  CHECK(validate_pair(rd, {rd.full_levi(), iv({1, 0, 0, 0})}));
  CHECK_FALSE(validate_pair(rd, {levi({0}), iv({1, 0, 0, 0})}));  // S not stable
}

TEST_CASE("GL4 minuscule down-set matches the reference diagram") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  PairPoset poset = down_set(gl4, {gl4.full_levi(), mu});
  CHECK(poset.nodes.size() == 8);
  CHECK(poset.edges.size() == 8);

  // Every subset of the simple roots occurs exactly once, always with the
  // same dominant cocharacter.
  std::set<LeviSet> seen;
  for (const CocharacterPair& p : poset.nodes) {
    CHECK(p.mu == mu);
    seen.insert(p.S);
  }
  CHECK(seen.size() == 8);

  // Expected cover relations, as (lower Levi, upper Levi).
  std::set<std::pair<LeviSet, LeviSet>> expect = {
      {levi({0, 1}), levi({0, 1, 2})}, {levi({0, 2}), levi({0, 1, 2})},
      {levi({1, 2}), levi({0, 1, 2})}, {levi({0}), levi({0, 1})},
      {levi({1}), levi({0, 1})},       {levi({1}), levi({1, 2})},
      {levi({2}), levi({1, 2})},       {levi({}), levi({1})},
  };
  std::set<std::pair<LeviSet, LeviSet>> got;
  for (auto [lo, hi] : poset.edges)
    got.insert({poset.nodes[lo].S, poset.nodes[hi].S});
  CHECK(got == expect);
}

TEST_CASE("covers requires a strict theta decrease") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CocharacterPair top = {gl4.full_levi(), mu};
  CHECK(covers(gl4, {levi({0, 2}), mu}, top));
  CHECK(covers(gl4, {levi({0, 1}), mu}, top));
  // GL2xGL2 has theta-equal corank-1 neighbours below it, so no covers.
  CHECK(lower_covers(gl4, {levi({0, 2}), mu}).empty());
  CHECK_FALSE(covers(gl4, {levi({0}), mu}, {levi({0, 2}), mu}));
}

TEST_CASE("leq is strictly finer than theta comparison") {
  RootDatum gl4 = gl(4);
  CocharacterPair top = {gl4.full_levi(), iv({1, 1, 0, 0})};
  CocharacterPair p = {LeviSet{}, iv({1, 0, 1, 0})};
  // theta(top) is dominated by theta(p) with equal sum...
  CHECK(preceq_abs(gl4, theta(gl4, top), theta(gl4, p)));
  // ...but the pair order does not relate them.
  CHECK_FALSE(leq(gl4, p, top));
  CHECK(leq(gl4, {LeviSet{}, iv({1, 1, 0, 0})}, top));
  CHECK(leq(gl4, top, top));
}

TEST_CASE("strict decrease and strictly-decreasing set") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CHECK(is_strictly_decreasing(gl4, {levi({1}), mu}));
  CHECK(is_strictly_decreasing(gl4, {levi({0, 2}), mu}));
  CHECK_FALSE(is_strictly_decreasing(gl4, {levi({0}), mu}));
  CHECK_FALSE(is_strictly_decreasing(gl4, {LeviSet{}, mu}));

  std::vector<CocharacterPair> sd = sd_set(gl4, mu);
  CHECK(sd.size() == 5);
  std::set<LeviSet> ls;
  for (const CocharacterPair& p : sd) ls.insert(p.S);
  CHECK(ls == std::set<LeviSet>{levi({0, 1, 2}), levi({0, 1}), levi({1, 2}),
                                levi({0, 2}), levi({1})});
}

TEST_CASE("extension and cubes") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CHECK(extension(gl4, {levi({1}), mu}, levi({0, 1})) ==
        CocharacterPair{levi({0, 1}), mu});

  // Top pair: trivial cube.
  PairPoset c0 = cube(gl4, {gl4.full_levi(), mu});
  CHECK(c0.nodes.size() == 1);

  // Strictly decreasing corank-1 pair: one climbable root, a 2-node cube.
  PairPoset c1 = cube(gl4, {levi({0, 1}), mu});
  CHECK(c1.nodes.size() == 2);
  CHECK(c1.edges.size() == 1);

  // Torus pair climbs to (GL1xGL2xGL1) and extends over {alpha_0, alpha_2}:
  // a 4-node square.
  PairPoset c2 = cube(gl4, {LeviSet{}, mu});
  CHECK(c2.nodes.size() == 4);
  CHECK(c2.edges.size() == 4);
  std::set<LeviSet> ls;
  for (const CocharacterPair& p : c2.nodes) ls.insert(p.S);
  CHECK(ls == std::set<LeviSet>{levi({1}), levi({0, 1}), levi({1, 2}),
                                levi({0, 1, 2})});
}

TEST_CASE("GL5 relations") {
  RootDatum gl5 = gl(5);
  IntVec mu = iv({1, 1, 1, 0, 0});
  CocharacterPair top = {gl5.full_levi(), mu};
  CHECK(leq(gl5, {levi({0, 1, 3}), iv({1, 1, 1, 0, 0})}, top));  // GL3xGL2, (1,1,1)(0,0)
  CHECK(leq(gl5, {levi({0, 1, 3}), iv({1, 1, 0, 1, 0})}, top));  // GL3xGL2, (1,1,0)(1,0)
  CHECK(leq(gl5, {LeviSet{}, iv({1, 1, 0, 1, 0})}, top));
  CHECK_FALSE(leq(gl5, {LeviSet{}, iv({1, 0, 1, 0, 1})}, top));
}

TEST_CASE("group actions on pairs") {
  RootDatum rd = res(2, 2);
  CocharacterPair p = {LeviSet{}, iv({1, 0, 0, 0})};
  CocharacterPair q = gamma_apply(rd, GammaElt{1}, p);
  CHECK(q == CocharacterPair{LeviSet{}, iv({0, 0, 1, 0})});

  RootDatum gl3 = gl(3);
  RelPerm w = {{1, 2, 0}};
  CHECK(weyl_apply_levi(gl3, w, levi({0})) == levi({1}));
  CHECK(weyl_apply(gl3, w, {levi({0}), iv({1, 0, 2})}) ==
        CocharacterPair{levi({1}), iv({2, 1, 0})});
  CHECK_THROWS_AS(weyl_apply_levi(gl3, {{1, 0, 2}}, levi({1})),
                  std::invalid_argument);
}
