#include <doctest.h>

#include <algorithm>

#include "cochar/mant_sum.hpp"
#include "cochar/sweep.hpp"
#include "helpers.hpp"

using namespace cochar;
using namespace cochar::testutil;

TEST_CASE("relative root counting") {
  RootDatum gl4 = gl(4);
  CHECK(rel_root_count(gl4, LeviSet{}, gl4.full_levi()) == 3);
  CHECK(rel_root_count(gl4, levi({0}), levi({0, 2})) == 1);
  RootDatum rd = res(3, 2);
  CHECK(rel_root_count(rd, LeviSet{}, rd.full_levi()) == 1);  // one orbit of 3 roots
}

TEST_CASE("dominant conjugates") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CHECK(dominant_conjugates(gl4, gl4.full_levi(), LeviSet{}, mu).size() == 6);
  auto on_22 = dominant_conjugates(gl4, gl4.full_levi(), levi({0, 2}), mu);
  CHECK(on_22 == std::vector<IntVec>{iv({0, 0, 1, 1}), iv({1, 0, 1, 0}),
                                     iv({1, 1, 0, 0})});
  // Conjugation confined to a smaller ambient Levi.
  CHECK(dominant_conjugates(gl4, levi({0, 2}), LeviSet{}, mu) ==
        std::vector<IntVec>{iv({1, 1, 0, 0})});
}

TEST_CASE("R-set and signs of the basic GL4 class") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  IsocrystalClass basic = enumerate_B(gl4, mu).back();
  REQUIRE(basic.levi == gl4.full_levi());
  CHECK(R_set(gl4, basic, mu).size() == 8);  // whole down-set of the top pair

  SignedPairSum m = M_sum(gl4, basic, mu);
  REQUIRE(m.coeff.size() == 8);
  for (const auto& [p, c] : m.coeff) {
    int corank = 3 - rel_root_count(gl4, LeviSet{}, p.S);
    CHECK(c == (corank % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("sum formula on sample cases") {
  RootDatum gl4 = gl(4);
  SumCheck c = verify_sum_formula(gl4, iv({1, 1, 0, 0}));
  CHECK(c.ok);
  CHECK(c.residual.empty());
  CHECK(verify_sum_formula(gl4, iv({2, 1, 1, 0})).ok);
  CHECK(verify_sum_formula(res(2, 2), iv({1, 0, 0, 0})).ok);
  CHECK(verify_sum_formula(res(3, 2), iv({1, 0, 0, 0, 0, 0})).ok);
  RootDatum pr = product({{1, 2}, {1, 2}});
  CHECK(verify_sum_formula(pr, iv({1, 0, 1, 0})).ok);
}

TEST_CASE("non-strictly-decreasing pairs cancel over their cube") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  for (const CocharacterPair& p : down_set(gl4, {gl4.full_levi(), mu}).nodes) {
    if (is_strictly_decreasing(gl4, p)) continue;
    PairPoset c = cube(gl4, p);
    long long total = 0;
    for (const CocharacterPair& q : c.nodes)
      total += rel_root_count(gl4, p.S, q.S) % 2 == 0 ? 1 : -1;
    CHECK(total == 0);
  }
}

TEST_CASE("I-sets") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  auto bs = enumerate_B(gl4, mu);

  // nu = (1,1,0,0): only the block-aligned conjugate survives.
  CHECK(I_set(gl4, levi({0, 2}), bs[0], mu) ==
        std::vector<CocharacterPair>{{levi({0, 2}), iv({1, 1, 0, 0})}});
  // nu = (1,1/2,1/2,0) against GL1xGL3.
  CHECK(I_set(gl4, levi({1, 2}), bs[1], mu) ==
        std::vector<CocharacterPair>{{levi({1, 2}), iv({1, 1, 0, 0})}});
  // Basic class, full Levi: the identity instance.
  CHECK(I_set(gl4, gl4.full_levi(), bs[4], mu) ==
        std::vector<CocharacterPair>{{gl4.full_levi(), mu}});
  CHECK_THROWS_AS(I_set(gl4, LeviSet{}, bs[1], mu), std::domain_error);
}

TEST_CASE("induction formula and transitivity on sample classes") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  for (const IsocrystalClass& b : enumerate_B(gl4, mu))
    for (const LeviSet& S : stable_levis(gl4)) {
      if (!std::includes(S.begin(), S.end(), b.levi.begin(), b.levi.end())) continue;
      CHECK(verify_induction_formula(gl4, S, b, mu));
      for (const LeviSet& S2 : stable_levis(gl4)) {
        if (!std::includes(S.begin(), S.end(), S2.begin(), S2.end())) continue;
        if (!std::includes(S2.begin(), S2.end(), b.levi.begin(), b.levi.end()))
          continue;
        CHECK(verify_I_transitivity(gl4, S2, S, b, mu));
      }
    }
}

TEST_CASE("M-sums of product groups decompose as tensors") {
  RootDatum pr = product({{1, 2}, {1, 2}});
  IntVec mu = iv({1, 0, 1, 0});
  IsocrystalClass basic = enumerate_B(pr, mu).back();
  SignedPairSum m = M_sum(pr, basic, mu);
  REQUIRE(m.coeff.size() == 4);

  std::vector<SignedPairSum> fs = product_decompose(pr, m);
  REQUIRE(fs.size() == 2);
  RootDatum gl2 = gl(2);
  // Each tensor factor is the GL2 basic M-sum up to the unit normalization;
  // the product of the factor signs recombines to the original sum.
  for (const SignedPairSum& f : fs) {
    SignedPairSum expect;
    expect.add({gl2.full_levi(), iv({1, 0})}, -1);
    expect.add({LeviSet{}, iv({1, 0})}, 1);
    CHECK(f == expect);
  }
  long long top = m.coeff.at({pr.full_levi(), mu});
  long long f0 = fs[0].coeff.at({gl2.full_levi(), iv({1, 0})});
  long long f1 = fs[1].coeff.at({gl2.full_levi(), iv({1, 0})});
  CHECK(f0 * f1 == top);

  SignedPairSum bad = m;
  bad.add({LeviSet{}, iv({1, 0, 0, 1})}, 1);
  CHECK_THROWS_AS(product_decompose(pr, bad), std::domain_error);
}

TEST_CASE("rel sets") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  IsocrystalClass basic = enumerate_B(gl4, mu).back();
  CHECK(rel_set(gl4, levi({0, 2}), basic, mu) ==
        std::vector<CocharacterPair>{{levi({0, 2}), iv({1, 0, 1, 0})}});
  CHECK(rel_set(gl4, gl4.full_levi(), basic, mu) ==
        std::vector<CocharacterPair>{{gl4.full_levi(), mu}});
  CHECK(rel_set(gl4, LeviSet{}, basic, mu).empty());  // no integral theta match

  RootDatum gl3 = gl(3);
  IntVec mu3 = iv({1, 1, 0});
  IsocrystalClass b = enumerate_B(gl3, mu3)[1];
  REQUIRE(b.newton == rv({1, Rat(1, 2), Rat(1, 2)}));
  CHECK(rel_set(gl3, levi({1}), b, mu3) ==
        std::vector<CocharacterPair>{{levi({1}), iv({1, 1, 0})}});
}

TEST_CASE("Weyl coset representatives") {
  RootDatum gl3 = gl(3);
  WeylCosets wc = weyl_cosets(gl3, levi({0}), levi({1}));
  CHECK(wc.WS.size() == 3);
  CHECK(wc.WSN.size() == 2);
  REQUIRE(wc.Wb.size() == 1);
  CHECK(wc.Wb[0] == RelPerm{{1, 2, 0}});

  CHECK(weyl_cosets(gl3, gl3.full_levi(), gl3.full_levi()).Wb.size() == 1);
  CHECK(weyl_cosets(gl(4), LeviSet{}, LeviSet{}).WS.size() == 24);
}

TEST_CASE("unique transfer") {
  RootDatum gl3 = gl(3);
  IntVec mu = iv({1, 1, 0});

  // A strictly decreasing pair transfers to its own T-image by the identity.
  Transfer t = unique_transfer(gl3, {levi({0}), iv({1, 1, 0})}, mu);
  CHECK(t.b.newton == rv({1, 1, 0}));
  CHECK(t.w == gl3.rel_identity());

  // A torus pair needing a genuine Weyl move.
  Transfer u = unique_transfer(gl3, {LeviSet{}, iv({0, 1, 1})}, mu);
  CHECK(u.b.newton == rv({1, 1, 0}));
  CHECK(u.w == RelPerm{{2, 0, 1}});
}

TEST_CASE("sumrel bijection on sample groups") {
  RootDatum gl3 = gl(3);
  for (const LeviSet& S : stable_levis(gl3))
    CHECK(verify_sumrel_bijection(gl3, S, iv({1, 1, 0})));
  RootDatum rd = res(2, 2);
  for (const LeviSet& S : stable_levis(rd))
    CHECK(verify_sumrel_bijection(rd, S, iv({1, 0, 0, 0})));
}

TEST_CASE("Galois orbit partition") {
  RootDatum rd = res(2, 2);
  std::vector<CocharacterPair> pairs = {{LeviSet{}, iv({1, 0, 0, 0})},
                                        {LeviSet{}, iv({0, 1, 0, 0})},
                                        {LeviSet{}, iv({0, 0, 1, 0})},
                                        {LeviSet{}, iv({0, 0, 0, 1})}};
  auto orbits = galois_orbit_partition(rd, pairs);
  REQUIRE(orbits.size() == 2);
  for (const GaloisOrbit& o : orbits) {
    CHECK(o.members.size() == 2);
    CHECK(o.stabilizer.size() == 1);  // trivial stabilizer
  }
  // An unstable set is rejected.
  CHECK_THROWS_AS(
      galois_orbit_partition(rd, {{LeviSet{}, iv({1, 0, 0, 0})}}),
      std::domain_error);
}
