#include <doctest.h>

#include <algorithm>

#include "cochar/root_datum.hpp"
#include "cochar/snf.hpp"
#include "helpers.hpp"

using namespace cochar;
using namespace cochar::testutil;

TEST_CASE("coordinates are factor-major, block-major") {
  RootDatum rd = product({{2, 2}, {1, 3}});
  CHECK(rd.dimension() == 7);
  CHECK(rd.coord(0, 0, 1) == 1);
  CHECK(rd.coord(0, 1, 0) == 2);
  CHECK(rd.coord(1, 0, 2) == 6);
  CHECK(rd.num_simple() == 4);  // 2 roots in factor 0 (one per block), 2 in factor 1
}

TEST_CASE("relative simple roots are Gamma_0-orbits") {
  RootDatum rd = res(3, 2);
  CHECK(rd.num_simple() == 3);
  CHECK(rd.relative_simple().size() == 1);
  std::vector<int> orbit = rd.rel_orbit(0);
  CHECK(orbit == std::vector<int>{0, 1, 2});

  RootDatum gl4 = gl(4);
  CHECK(gl4.relative_simple().size() == 3);
  CHECK(gl4.rel_orbit(1) == std::vector<int>{1});
}

TEST_CASE("gamma action shifts blocks cyclically") {
  RootDatum rd = res(2, 2);
  RatVec v = rv({1, 0, 0, 0});
  RatVec w = rd.gamma_apply(GammaElt{1}, v);
  CHECK(w == rv({0, 0, 1, 0}));
  CHECK(gamma_average(rd, v) == rv({Rat(1, 2), 0, Rat(1, 2), 0}));
  CHECK(rd.gamma_elements().size() == 2);
  CHECK_FALSE(rd.is_gamma_fixed(v));
  CHECK(rd.is_gamma_fixed(rv({1, 0, 1, 0})));
}

TEST_CASE("rel_apply acts diagonally across blocks") {
  RootDatum rd = res(2, 2);
  RelPerm w = {{1, 0}};
  CHECK(rd.rel_apply(w, rv({1, 2, 3, 4})) == rv({2, 1, 4, 3}));
  CHECK(rd.rel_compose(w, w) == rd.rel_identity());
}

TEST_CASE("theta averages over Gamma_0 then over Levi blocks") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CHECK(theta(gl4, levi({0, 2}), mu) == rv({1, 1, 0, 0}));
  CHECK(theta(gl4, gl4.full_levi(), mu) ==
        rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(theta(gl4, levi({0, 2}), iv({1, 0, 1, 0})) ==
        rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));

  RootDatum rd = res(2, 2);
  CHECK(theta(rd, LeviSet{}, iv({1, 0, 0, 0})) == rv({Rat(1, 2), 0, Rat(1, 2), 0}));
  CHECK(theta(rd, rd.full_levi(), iv({1, 0, 0, 0})) ==
        rv({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
}

TEST_CASE("dominant representative sorts each Levi interval") {
  RootDatum gl4 = gl(4);
  CHECK(dominant_rep(gl4, gl4.full_levi(), iv({0, 1, 0, 1})) == iv({1, 1, 0, 0}));
  CHECK(dominant_rep(gl4, levi({2}), iv({0, 1, 0, 1})) == iv({0, 1, 1, 0}));
  CHECK(is_dominant(gl4, gl4.full_levi(), iv({1, 1, 0, 0})));
  CHECK_FALSE(is_dominant(gl4, gl4.full_levi(), iv({1, 0, 1, 0})));
  CHECK(is_conjugate_in_levi(gl4, gl4.full_levi(), iv({1, 0, 1, 0}), iv({1, 1, 0, 0})));
  CHECK_FALSE(is_conjugate_in_levi(gl4, levi({0}), iv({1, 0, 1, 0}), iv({1, 1, 0, 0})));
}

TEST_CASE("absolute dominance order via prefix sums") {
  RootDatum gl4 = gl(4);
  CHECK(preceq_abs(gl4, rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                   rv({1, 1, 0, 0})));
  CHECK(preceq_abs(gl4, rv({1, 1, 0, 0}), rv({2, 0, 0, 0})));
  CHECK_FALSE(preceq_abs(gl4, rv({2, 0, 0, 0}), rv({1, 1, 0, 0})));
  // Different interval sums never compare.
  CHECK_FALSE(preceq_abs(gl4, rv({1, 0, 0, 0}), rv({1, 1, 0, 0})));
  // Ambient-Levi variant: comparisons stay within each interval.
  CHECK_FALSE(preceq_abs(gl4, rv({1, 0, 1, 0}), rv({1, 1, 0, 0}), levi({0, 2})));
  CHECK(preceq_abs(gl4, rv({1, 0, 1, 0}), rv({1, 0, 1, 0}), levi({0, 2})));
}

TEST_CASE("relative dominance order on Gamma_0-fixed vectors") {
  RootDatum rd = res(2, 2);
  RatVec lo = rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  RatVec hi = rv({1, 0, 1, 0});
  CHECK(preceq_rel(rd, lo, hi));
  CHECK_FALSE(preceq_rel(rd, hi, lo));
  // On split groups the relative order agrees with the absolute order.
  RootDatum gl3 = gl(3);
  RatVec a = rv({1, 1, 1});
  RatVec b = rv({2, 1, 0});
  CHECK(preceq_rel(gl3, a, b) == preceq_abs(gl3, a, b));
}

TEST_CASE("rho pairing") {
  RootDatum gl4 = gl(4);
  CHECK(rho_pairing(gl4, gl4.full_levi(), iv({1, 1, 0, 0})) == Rat(2));
  CHECK(rho_vec(gl4, gl4.full_levi()) ==
        rv({Rat(3, 2), Rat(1, 2), Rat(-1, 2), Rat(-3, 2)}));
  CHECK(rho_pairing(gl4, levi({0, 2}), iv({1, 1, 0, 0})) == Rat(0));
  CHECK(rho_pairing(gl4, levi({0, 2}), iv({1, 0, 1, 0})) == Rat(1));
}

TEST_CASE("root pairing against theta") {
  RootDatum gl4 = gl(4);
  RatVec v = rv({1, Rat(1, 2), Rat(1, 2), 0});
  CHECK(root_pairing(gl4, 0, v) == Rat(1, 2));
  CHECK(root_pairing(gl4, 1, v) == Rat(0));
  CHECK(root_pairing(gl4, 2, v) == Rat(1, 2));
}

TEST_CASE("relative reflections are Gamma_0-equivariant involutions") {
  for (RootDatum rd : {res(2, 3), res(3, 2), res(2, 2)}) {
    for (int r = 0; r < rd.num_simple(); ++r) {
      std::vector<int> s = relative_reflection(rd, r);
      // involution
      for (int i = 0; i < rd.dimension(); ++i) CHECK(s[s[i]] == i);
      // commutes with every gamma
      for (const GammaElt& g : rd.gamma_elements())
        for (int i = 0; i < rd.dimension(); ++i)
          CHECK(rd.gamma_coord(g, s[i]) == s[rd.gamma_coord(g, i)]);
      CHECK(fundamental_weight_restriction(rd, r) == 1);
    }
  }
}

TEST_CASE("relative Weyl group enumeration") {
  RootDatum rd = res(2, 3);
  CHECK(enumerate_rel_weyl(rd, rd.full_levi()).size() == 6);
  CHECK(enumerate_rel_weyl(rd, LeviSet{}).size() == 1);
  LeviSet sub = rd.gamma_closure(levi({0}));
  CHECK(enumerate_rel_weyl(rd, sub).size() == 2);

  RootDatum pr = product({{1, 2}, {1, 3}});
  CHECK(enumerate_rel_weyl(pr, pr.full_levi()).size() == 12);
}

TEST_CASE("Smith normal form") {
  IMat a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SnfResult r = smith_diagonalize(a);
  CHECK(r.rank == 3);
  REQUIRE(r.diag.size() == 3);
  CHECK(abs(r.diag[0]) == 2);  // invariant factors 2, 6, 12
  CHECK(abs(r.diag[1]) == 6);
  CHECK(abs(r.diag[2]) == 12);
  CHECK(int_det(a) == BigInt(-144));

  IMat b = {{1, 0}, {0, 1}, {1, 1}};  // rank 2 in Z^3
  SnfResult s = smith_diagonalize(b);
  CHECK(s.rank == 2);
  CHECK(s.diag == std::vector<BigInt>{1, 1});
}
