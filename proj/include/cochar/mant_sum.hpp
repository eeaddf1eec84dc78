#pragma once

#include <map>

#include "cochar/kottwitz.hpp"

namespace cochar {

// Element of the free abelian group on cocharacter pairs.
struct SignedPairSum {
  std::map<CocharacterPair, long long> coeff;
  void add(const CocharacterPair& p, long long c) {
    auto it = coeff.find(p);
    if (it == coeff.end()) {
      if (c != 0) coeff.emplace(p, c);
    } else if ((it->second += c) == 0) {
      coeff.erase(it);
    }
  }
  bool empty() const { return coeff.empty(); }
  bool operator==(const SignedPairSum& o) const { return coeff == o.coeff; }
};

// Number of relative simple roots in S2 \ S1 (the sign exponent L_{M_S1,M_S2}).
int rel_root_count(const RootDatum& rd, const LeviSet& S1, const LeviSet& S2);

// All M_S-dominant vectors conjugate to mu in M_amb (S subset of amb).
std::vector<IntVec> dominant_conjugates(const RootDatum& rd, const LeviSet& amb,
                                        const LeviSet& S, const IntVec& mu);

// Downward closure of the T-fiber of b over mu (inside the ambient of b).
std::vector<CocharacterPair> R_set(const RootDatum& rd, const IsocrystalClass& b,
                                   const IntVec& mu);

// M_{G,b,mu}: sum over R_set with sign (-1)^{|S_b \ S| relative roots}.
SignedPairSum M_sum(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu);

struct SumCheck {
  bool ok = false;
  SignedPairSum residual;  // difference from the expected singleton (G, mu)
};
SumCheck verify_sum_formula(const RootDatum& rd, const IntVec& mu, const LeviSet& amb);
SumCheck verify_sum_formula(const RootDatum& rd, const IntVec& mu);

// I-set: M_S-dominant conjugates mu_S of mu with b_S in B(M_S, mu_S).
std::vector<CocharacterPair> I_set(const RootDatum& rd, const LeviSet& S,
                                   const IsocrystalClass& b, const IntVec& mu);

bool verify_induction_formula(const RootDatum& rd, const LeviSet& S,
                              const IsocrystalClass& b, const IntVec& mu);

bool verify_I_transitivity(const RootDatum& rd, const LeviSet& S2, const LeviSet& S1,
                           const IsocrystalClass& b, const IntVec& mu);

// Factorization of a pair sum over a product group; throws if the sum is not
// of tensor form. Each factor sum lives in the single-factor root datum.
std::vector<SignedPairSum> product_decompose(const RootDatum& rd, const SignedPairSum& sum);

// Rel set: pairs (S, mu_S) with theta equal to some T-fiber pair of b and
// mu_S conjugate to its cocharacter inside M_{S_b}.  Requires S subset of S_b.
std::vector<CocharacterPair> rel_set(const RootDatum& rd, const LeviSet& S,
                                     const IsocrystalClass& b, const IntVec& mu);

struct WeylCosets {
  std::vector<RelPerm> WS;   // minimal-length representatives for W_{M_S}\W
  std::vector<RelPerm> WSN;  // two-sided representatives W_{M_S}\W/W_{N_S}
  std::vector<RelPerm> Wb;   // those with w(M_S) contained in M_N
};
WeylCosets weyl_cosets(const RootDatum& rd, const LeviSet& S, const LeviSet& N);

struct Transfer {
  IsocrystalClass b;
  RelPerm w;
};
// The unique (b, w) with w in W_b and w(p) in rel_set(w(S), b, mu).
Transfer unique_transfer(const RootDatum& rd, const CocharacterPair& p, const IntVec& mu);

bool verify_sumrel_bijection(const RootDatum& rd, const LeviSet& S, const IntVec& mu);

struct GaloisOrbit {
  std::vector<CocharacterPair> members;
  std::vector<GammaElt> stabilizer;  // of the representative members[0]
};
std::vector<GaloisOrbit> galois_orbit_partition(const RootDatum& rd,
                                                const std::vector<CocharacterPair>& pairs,
                                                const std::vector<GammaElt>& group);
std::vector<GaloisOrbit> galois_orbit_partition(const RootDatum& rd,
                                                const std::vector<CocharacterPair>& pairs);

}  // namespace cochar
