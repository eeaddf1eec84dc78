#pragma once

#include "cochar/pair_poset.hpp"

namespace cochar {

// Element of B(M_ambient): (Levi S_b, Newton point, Kottwitz point).  kappa is
// stored in the per-relative-block coordinates of the ambient Levi's center
// character lattice; (ambient, levi, newton) determine the class.
struct IsocrystalClass {
  LeviSet ambient;
  LeviSet levi;
  RatVec newton;
  IntVec kappa;
  bool operator==(const IsocrystalClass& o) const {
    return ambient == o.ambient && levi == o.levi && newton == o.newton;
  }
  bool operator<(const IsocrystalClass& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (levi != o.levi) return levi < o.levi;
    return newton < o.newton;
  }
};

// X^*(Z(M_S^)^Gamma) presented in per-relative-block coordinates, validated
// against the Smith-normal-form presentation of the coinvariant quotient.
struct CenterLattice {
  LeviSet levi;
  std::vector<RelBlock> blocks;  // one coordinate per block
  int rank() const { return static_cast<int>(blocks.size()); }
};

CenterLattice center_character_lattice(const RootDatum& rd, const LeviSet& S);
IntVec kappa_at(const RootDatum& rd, const LeviSet& S, const IntVec& mu);
// Image of a lattice point under the Lemma 2.12 isomorphism into A_{M_S,Q}.
RatVec map_to_A(const RootDatum& rd, const CenterLattice& L, const IntVec& chi);

std::vector<IsocrystalClass> enumerate_B(const RootDatum& rd, const IntVec& mu,
                                         const LeviSet& amb);
std::vector<IsocrystalClass> enumerate_B(const RootDatum& rd, const IntVec& mu);

IsocrystalClass T_map(const RootDatum& rd, const CocharacterPair& p, const LeviSet& amb);
IsocrystalClass T_map(const RootDatum& rd, const CocharacterPair& p);

std::vector<CocharacterPair> fiber_T(const RootDatum& rd, const IsocrystalClass& b,
                                     const IntVec& mu, const LeviSet& amb);
std::vector<CocharacterPair> fiber_T(const RootDatum& rd, const IsocrystalClass& b,
                                     const IntVec& mu);

// Image of b under B(M_{S_b}) -> B(M_S) for S_b <= S <= ambient.
IsocrystalClass b_transfer(const RootDatum& rd, const IsocrystalClass& b, const LeviSet& S);

// Membership of b (with ambient S) in B(M_S, mu_S).
bool B_member(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu_S);

struct OpenQuestionResult {
  bool equal = false;
  std::vector<IsocrystalClass> uncovered;  // in B(G,mu) but not in T(SD_mu)
  std::vector<IsocrystalClass> extra;      // in T(SD_mu) but not in B(G,mu)
};
OpenQuestionResult test_open_question(const RootDatum& rd, const IntVec& mu,
                                      const LeviSet& amb);
OpenQuestionResult test_open_question(const RootDatum& rd, const IntVec& mu);

}  // namespace cochar
