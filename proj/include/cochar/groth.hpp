#pragma once

#include <map>
#include <string>
#include <variant>

#include "cochar/mant_sum.hpp"

namespace cochar {

// A cuspidal line rho(k): an opaque label plus an exact twist.
struct CuspidalLine {
  std::string id;
  Rat twist;
  bool operator==(const CuspidalLine& o) const { return id == o.id && twist == o.twist; }
  bool operator<(const CuspidalLine& o) const {
    return id != o.id ? id < o.id : twist < o.twist;
  }
};

// Formal representation class in the Grothendieck group.
//   regular:  class of M_level with regular principal-series support, given by
//             its Borel-Jacquet vector: integer coefficients on orderings of a
//             fixed tuple of pairwise distinct lines (single split factor).
//   cuspidal: class of the normalized induction I^{M_level}_{M_supp} of a
//             supercuspidal tensor product, one line per block of the support.
struct FormalRep {
  enum class Regime { regular, cuspidal };
  Regime regime = Regime::regular;
  LeviSet level;
  std::vector<CuspidalLine> lines;             // regular: the line tuple
  std::map<std::vector<int>, long long> borel; // regular: ordering -> coeff
  LeviSet supp;                                // cuspidal: support Levi
  std::vector<CuspidalLine> cuspidal;          // cuspidal: line per supp block
  bool operator==(const FormalRep& o) const {
    return regime == o.regime && level == o.level && lines == o.lines &&
           borel == o.borel && supp == o.supp && cuspidal == o.cuspidal;
  }
};

FormalRep make_regular(const RootDatum& rd, std::vector<CuspidalLine> lines,
                       std::map<std::vector<int>, long long> borel);
FormalRep make_cuspidal(const RootDatum& rd, const LeviSet& supp,
                        std::vector<CuspidalLine> lines);

// One Galois-side summand: per factor and per block, the multiset of dual
// lines with exponents; the line twists are folded into the tate exponent.
struct GaloisTerm {
  using BlockEntry = std::vector<std::pair<std::string, int>>;  // (id, exponent)
  std::vector<std::vector<BlockEntry>> entries;  // [factor][block]
  Rat tate;
  std::vector<int> field;  // per factor: orbit size of the cocharacter slice
  int orbit_size = 1;
  auto key() const { return std::tie(entries, tate, field, orbit_size); }
  bool operator==(const GaloisTerm& o) const { return key() == o.key(); }
  bool operator<(const GaloisTerm& o) const { return key() < o.key(); }
};

// Group-side key of an EvalResult term: a Borel ordering (regular regime) or
// the isomorphism class of an induced-from-cuspidal rep, which depends only on
// the per-factor multiset of (block size, line).
using InducedKey = std::vector<std::vector<std::pair<int, CuspidalLine>>>;
using RepKey = std::variant<std::vector<int>, InducedKey>;

struct EvalResult {
  std::map<std::pair<RepKey, GaloisTerm>, long long> terms;
  void add(const RepKey& r, const GaloisTerm& g, long long c) {
    auto it = terms.find({r, g});
    if (it == terms.end()) {
      if (c != 0) terms.emplace(std::make_pair(r, g), c);
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }
  void add_all(const EvalResult& o, long long scale) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c * scale);
  }
  bool empty() const { return terms.empty(); }
  bool operator==(const EvalResult& o) const { return terms == o.terms; }
};

InducedKey induced_key(const RootDatum& rd, const FormalRep& rep);

// Weight-distribution branching of r_{-mu} to M_S (mu minuscule).
std::vector<CocharacterPair> branch_minuscule(const RootDatum& rd, const LeviSet& S,
                                              const IntVec& mu);

// Cuspidal support multiset (semisimplified parameter bookkeeping).
std::vector<CuspidalLine> ll_ss(const FormalRep& rep);

struct RepTerm {
  FormalRep rep;
  long long coeff;
};
using RepCombo = std::vector<RepTerm>;

// Normalized Jacquet module down to M_S, as a combination at level S.
RepCombo jacquet(const RootDatum& rd, const FormalRep& rep, const LeviSet& S);
// Normalized induction of a combination up to M_L.
RepCombo induct(const RootDatum& rd, const RepCombo& combo, const LeviSet& L);

// Support for one absolute interval: (line, dimension) entries in order.
using IntervalSupport = std::vector<std::pair<CuspidalLine, int>>;

// [mu_S] on a class with the given per-interval cuspidal support (intervals
// aligned with rd.abs_intervals(S)); tate = -<rho_{M_S}, mu_S> minus the
// summed twists of the selected dual lines.
std::map<GaloisTerm, long long> galois_apply(const RootDatum& rd, const LeviSet& S,
                                             const IntVec& mu_S,
                                             const std::vector<IntervalSupport>& supports);

// The operator [M_S, mu_S] of the pair p applied to rep, with the structural
// twist normalized so every term carries tate -<rho_G, mu> plus line twists.
EvalResult bracket(const RootDatum& rd, const CocharacterPair& p, const FormalRep& rep,
                   const IntVec& mu);

// [M_{G,b,mu}](rep): signed sum of brackets over M_sum, with Galois terms
// assembled over the orbits of the stabilizer of {mu}.
EvalResult evaluate_M(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu,
                      const FormalRep& rep);

// Harris's conjecture instance: evaluate_M(b, mu, I^G_S(rho)) against the
// closed form [I^G_S(rho)] (x) sum over rel_set(S,b,mu) of Galois terms.
bool check_harris(const RootDatum& rd, const LeviSet& S, const IsocrystalClass& b,
                  const IntVec& mu, const FormalRep& rho);

// -- Regular-support dictionary fixture -------------------------------------

// A dictionary of irreducible classes with regular support: each class is a
// 0/1 Borel vector and the supports partition all orderings.
struct RegularFixture {
  std::vector<CuspidalLine> lines;
  std::vector<std::pair<std::string, std::vector<std::vector<int>>>> classes;
};

// The GL_4 dictionary for lines rho(0..3) (classes named by their pattern of
// simple roots), validated as a partition at load.
const RegularFixture& gl4_fixture();
FormalRep fixture_rep(const RootDatum& rd, const RegularFixture& fx, const std::string& name);
void validate_fixture(const RootDatum& rd, const RegularFixture& fx);

// Express the ordering coefficients of each Galois term in the dictionary;
// throws if a vector is not constant on some class support.
std::map<GaloisTerm, std::map<std::string, long long>> regroup(const EvalResult& res,
                                                               const RegularFixture& fx);

}  // namespace cochar
