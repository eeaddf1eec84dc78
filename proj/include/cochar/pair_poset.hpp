#pragma once

#include <optional>
#include <string>

#include "cochar/root_datum.hpp"

namespace cochar {

struct CocharacterPair {
  LeviSet S;
  IntVec mu;
  bool operator==(const CocharacterPair& o) const { return S == o.S && mu == o.mu; }
  bool operator<(const CocharacterPair& o) const {
    return S != o.S ? S < o.S : mu < o.mu;
  }
};

struct PairPoset {
  std::vector<CocharacterPair> nodes;              // sorted canonically
  std::vector<std::pair<int, int>> edges;          // (lower index, upper index)
};

bool validate_pair(const RootDatum& rd, const CocharacterPair& p);
RatVec theta(const RootDatum& rd, const CocharacterPair& p);
std::string pair_label(const RootDatum& rd, const CocharacterPair& p);

// All pairs covered by p: the Levi loses one relative simple root.
std::vector<CocharacterPair> lower_covers(const RootDatum& rd, const CocharacterPair& p);

bool covers(const RootDatum& rd, const CocharacterPair& lower, const CocharacterPair& upper);
bool leq(const RootDatum& rd, const CocharacterPair& p2, const CocharacterPair& p1);
PairPoset down_set(const RootDatum& rd, const CocharacterPair& top);

bool is_strictly_decreasing(const RootDatum& rd, const CocharacterPair& p,
                            const LeviSet& relative_to);
bool is_strictly_decreasing(const RootDatum& rd, const CocharacterPair& p);

// Unique pair >= p with Levi S2 (p must be strictly decreasing relative to S2).
CocharacterPair extension(const RootDatum& rd, const CocharacterPair& p, const LeviSet& S2);

// The directed cube of extensions of p over subsets of the relative simple
// roots in amb \ S_p pairing strictly positively with theta(p).
PairPoset cube(const RootDatum& rd, const CocharacterPair& p, const LeviSet& amb);
PairPoset cube(const RootDatum& rd, const CocharacterPair& p);

// All strictly decreasing pairs <= (M_amb, dominant_rep(amb, mu)).
std::vector<CocharacterPair> sd_set(const RootDatum& rd, const IntVec& mu, const LeviSet& amb);
std::vector<CocharacterPair> sd_set(const RootDatum& rd, const IntVec& mu);

std::string hasse_dot(const RootDatum& rd, const PairPoset& poset);

// Gamma_0 action on pairs with Gamma_0-stable Levi.
CocharacterPair gamma_apply(const RootDatum& rd, const GammaElt& g, const CocharacterPair& p);

// w(p) for w making w(M_S) a standard Levi; throws if the image is not standard.
CocharacterPair weyl_apply(const RootDatum& rd, const RelPerm& w, const CocharacterPair& p);
LeviSet weyl_apply_levi(const RootDatum& rd, const RelPerm& w, const LeviSet& S);

}  // namespace cochar
