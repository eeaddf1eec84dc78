#include <doctest.h>

#include "cochar/io.hpp"
#include "helpers.hpp"

using namespace cochar;
using namespace cochar::testutil;

TEST_CASE("group JSON parsing") {
  GroupSpec spec = parse_group_json(
      R"({"factors": [{"degree": 2, "rank": 3}, {"degree": 1, "rank": 2}]})");
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0].degree == 2);
  CHECK(spec.factors[0].rank == 3);
  CHECK(spec.factors[1].degree == 1);
  CHECK(spec.factors[1].rank == 2);
  CHECK_THROWS(parse_group_json(R"({"factors": [{"degree": 0, "rank": 3}]})"));
  CHECK_THROWS(parse_group_json(R"({"nope": 1})"));
}

TEST_CASE("rep JSON parsing") {
  RootDatum gl4 = gl(4);
  FormalRep fx = parse_rep_json(gl4, R"({"fixture": "appendixA", "class": "111"})");
  CHECK(fx == fixture_rep(gl4, gl4_fixture(), "111"));
  CHECK(parse_rep_json(gl4, R"({"fixture": "gl4", "class": "010"})") ==
        fixture_rep(gl4, gl4_fixture(), "010"));

  RootDatum gl2 = gl(2);
  FormalRep reg = parse_rep_json(gl2, R"({
    "regime": "regular",
    "lines": [{"id": "a", "twist": "0"}, {"id": "b", "twist": "1/2"}],
    "borel": [{"ordering": [1, 0], "coeff": 2}]})");
  CHECK(reg.regime == FormalRep::Regime::regular);
  CHECK(reg.lines[1].twist == Rat(1, 2));
  CHECK(reg.borel.at({1, 0}) == 2);

  FormalRep cusp = parse_rep_json(gl2, R"({
    "regime": "cuspidal", "levi": [0],
    "lines": [{"id": "pi", "twist": "-3"}]})");
  CHECK(cusp.regime == FormalRep::Regime::cuspidal);
  CHECK(cusp.supp == levi({0}));
  CHECK(cusp.cuspidal[0].twist == Rat(-3));
}

TEST_CASE("JSON and text renderings") {
  RootDatum gl4 = gl(4);
  IntVec mu = iv({1, 1, 0, 0});
  CocharacterPair top = {gl4.full_levi(), mu};

  nlohmann::json pj = pair_json(gl4, top);
  CHECK(pj["levi"].size() == 3);
  CHECK(pj["mu"].size() == 4);

  PairPoset poset = down_set(gl4, top);
  nlohmann::json qj = poset_json(gl4, poset);
  CHECK(qj["nodes"].size() == 8);
  CHECK(qj["edges"].size() == 8);

  auto bs = enumerate_B(gl4, mu);
  std::string bstr = isocrystal_string(gl4, bs.back());
  CHECK(bstr.find("1/2") != std::string::npos);
  CHECK(isocrystal_json(gl4, bs.back())["kappa"].size() == 1);

  SignedPairSum m = M_sum(gl4, bs.back(), mu);
  CHECK(pair_sum_json(gl4, m)["terms"].size() == 8);
  CHECK_FALSE(pair_sum_string(gl4, m).empty());

  EvalResult res = evaluate_M(gl4, bs.back(), mu, fixture_rep(gl4, gl4_fixture(), "000"));
  CHECK_FALSE(eval_string(res).empty());
  CHECK(eval_json(res)["terms"].size() == res.terms.size());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK(parse_rat_csv("1/2,0") == rv({Rat(1, 2), 0}));
  CHECK(parse_int_csv("1,1,0,0") == iv({1, 1, 0, 0}));
}
