#include <doctest.h>

#include <algorithm>

#include "cochar/kottwitz.hpp"
#include "cochar/sweep.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cochar;
using namespace cochar::testutil;

TEST_CASE("center character lattice is SNF-validated for every stable Levi") {
  for (RootDatum rd : {gl(4), res(2, 2), res(3, 2), product({{2, 1}, {1, 2}})}) {
    for (const LeviSet& S : stable_levis(rd)) {
      CenterLattice L = center_character_lattice(rd, S);
      CHECK(L.rank() == static_cast<int>(rd.rel_blocks(S).size()));
    }
  }
}

TEST_CASE("kappa coordinates are per-relative-block sums") {
  RootDatum gl4 = gl(4);
  CHECK(kappa_at(gl4, gl4.full_levi(), iv({1, 1, 0, 0})) == iv({2}));
  CHECK(kappa_at(gl4, levi({0, 2}), iv({1, 0, 1, 0})) == iv({1, 1}));

  RootDatum rd = res(2, 2);
  // Relative blocks of the torus: positions 0 and 1, summed over both blocks.
  CHECK(kappa_at(rd, LeviSet{}, iv({1, 0, 0, 0})) == iv({1, 0}));
  CHECK(kappa_at(rd, rd.full_levi(), iv({1, 0, 0, 0})) == iv({1}));
}

TEST_CASE("map_to_A lands on the theta average") {
  RootDatum rd = res(2, 2);
  CenterLattice L = center_character_lattice(rd, LeviSet{});
  CHECK(map_to_A(rd, L, iv({1, 0})) == theta(rd, LeviSet{}, iv({1, 0, 0, 0})));
  CenterLattice Lf = center_character_lattice(rd, rd.full_levi());
  CHECK(map_to_A(rd, Lf, iv({1})) ==
        rv({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
}

TEST_CASE("B(GL4, (1,1,0,0)) has the five known classes") {
  RootDatum gl4 = gl(4);
  auto bs = enumerate_B(gl4, iv({1, 1, 0, 0}));
  REQUIRE(bs.size() == 5);
  std::vector<RatVec> newtons;
  for (const IsocrystalClass& b : bs) {
    newtons.push_back(b.newton);
    CHECK(b.kappa == iv({2}));
    CHECK(b.ambient == gl4.full_levi());
  }
  std::vector<RatVec> expect = {
      rv({1, 1, 0, 0}),
      rv({1, Rat(1, 2), Rat(1, 2), 0}),
      rv({1, Rat(1, 3), Rat(1, 3), Rat(1, 3)}),
      rv({Rat(2, 3), Rat(2, 3), Rat(2, 3), 0}),
      rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
  };
  CHECK(newtons == expect);  // sorted lexicographically decreasing
  CHECK(bs[0].levi == levi({0, 2}));
  CHECK(bs[4].levi == gl4.full_levi());  // basic class
}

TEST_CASE("enumerate_B matches the brute-force slope oracle on split GL_n") {
  RootDatum gl4 = gl(4);
  for (IntVec mu : {iv({1, 1, 0, 0}), iv({1, 0, 0, 0}), iv({2, 1, 1, 0}),
                    iv({2, 2, 0, 0}), iv({1, 1, 1, 0})}) {
    std::vector<RatVec> got;
    for (const IsocrystalClass& b : enumerate_B(gl4, mu)) got.push_back(b.newton);
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_newton_points(4, mu));
  }
  RootDatum gl3 = gl(3);
  for (IntVec mu : {iv({1, 0, 0}), iv({2, 0, 0}), iv({2, 1, 0}), iv({1, 1, 0})}) {
    std::vector<RatVec> got;
    for (const IsocrystalClass& b : enumerate_B(gl3, mu)) got.push_back(b.newton);
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_newton_points(3, mu));
  }
}

TEST_CASE("B-sets for restricted groups live on Gamma_0-fixed Newton points") {
  RootDatum rd = res(2, 2);
  auto bs = enumerate_B(rd, iv({1, 0, 0, 0}));
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].newton == rv({Rat(1, 2), 0, Rat(1, 2), 0}));
  CHECK(bs[1].newton == rv({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
  for (const IsocrystalClass& b : bs) {
    CHECK(rd.is_gamma_fixed(b.newton));
    CHECK(b.kappa == iv({1}));
  }
}

TEST_CASE("T sends strictly decreasing pairs into B and fibers recover them") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  auto bs = enumerate_B(gl4, mu);
  auto sd = sd_set(gl4, mu);
  REQUIRE(sd.size() == bs.size());
  for (const CocharacterPair& p : sd) {
    IsocrystalClass b = T_map(gl4, p);
    CHECK(std::find(bs.begin(), bs.end(), b) != bs.end());
    auto fiber = fiber_T(gl4, b, mu);
    CHECK(std::find(fiber.begin(), fiber.end(), p) != fiber.end());
  }
  // The basic fiber is the single top pair.
  auto fiber = fiber_T(gl4, bs.back(), mu);
  REQUIRE(fiber.size() == 1);
  CHECK(fiber[0] == CocharacterPair{gl4.full_levi(), mu});
}

TEST_CASE("b_transfer and membership") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  auto bs = enumerate_B(gl4, mu);
  // nu = (1, 1/2, 1/2, 0): S_b = {1}; transfer to GL1xGL3.
  const IsocrystalClass& b = bs[1];
  REQUIRE(b.levi == levi({1}));
  IsocrystalClass bS = b_transfer(gl4, b, levi({1, 2}));
  CHECK(bS.ambient == levi({1, 2}));
  CHECK(bS.newton == b.newton);
  CHECK(B_member(gl4, bS, iv({1, 1, 0, 0})));
  CHECK_FALSE(B_member(gl4, bS, iv({0, 1, 1, 0})));  // kappa mismatch per block
}

TEST_CASE("open question holds for the GL4 minuscule case") {
  RootDatum gl4 = gl(4);
  OpenQuestionResult q = test_open_question(gl4, iv({1, 1, 0, 0}));
  CHECK(q.equal);
  CHECK(q.uncovered.empty());
  CHECK(q.extra.empty());
}

TEST_CASE("open question fails for non-minuscule GL3 cocharacters") {
  RootDatum gl3 = gl(3);
  OpenQuestionResult q = test_open_question(gl3, iv({2, 0, 0}));
  CHECK_FALSE(q.equal);
  CHECK(q.extra.empty());
  // nu = (1, 1/2, 1/2) is in B(G,mu) but is not the theta of any strictly
  // decreasing pair: mu_S entries come from {2,0,0}.
  bool found = false;
  for (const IsocrystalClass& b : q.uncovered)
    found |= b.newton == rv({1, Rat(1, 2), Rat(1, 2)});
  CHECK(found);
}
