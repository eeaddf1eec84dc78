#pragma once

#include <set>
#include <vector>

#include "cochar/rational.hpp"

namespace cochar {

// A product of Weil-restricted general linear factors: the i-th factor is
// Res_{F_i/Q_p} GL_{n_i} with F_i/Q_p unramified of degree d_i.  Coordinates on
// the diagonal torus are factor-major, block-major: factor i contributes d_i
// consecutive blocks of size n_i, one per embedding of F_i.
struct GroupFactor {
  int degree = 1;
  int rank = 1;
};

struct GroupSpec {
  std::vector<GroupFactor> factors;
};

// Absolute simple root e_i - e_{i+1} inside one block.
struct SimpleRoot {
  int factor;
  int block;  // block index within the factor, 0..degree-1
  int pos;    // position within the block, 0..rank-2; root is e_pos - e_{pos+1}
  int i, j;   // global coordinates: covector e_i^* - e_j^*
};

// Relative simple root: the Gamma_0-orbit of (factor, pos) over all blocks.
struct RelRoot {
  int factor;
  int pos;
  bool operator<(const RelRoot& o) const {
    return factor != o.factor ? factor < o.factor : pos < o.pos;
  }
  bool operator==(const RelRoot& o) const { return factor == o.factor && pos == o.pos; }
};

// Subset of absolute simple roots, by index into RootDatum::simple.
using LeviSet = std::set<int>;

// Element of Gamma_0 = product of cyclic block-shift groups: shift per factor.
using GammaElt = std::vector<int>;

// Element of the relative Weyl group (or of W^abs fixed by Gamma_0): one
// permutation of {0..n_i-1} per factor, applied diagonally to every block.
using RelPerm = std::vector<std::vector<int>>;

// Maximal interval of positions [start, end) within a factor's profile that
// forms one block of the standard Levi M_S.
struct RelBlock {
  int factor;
  int start, end;
  int size() const { return end - start; }
  bool operator<(const RelBlock& o) const {
    return factor != o.factor ? factor < o.factor
                              : (start != o.start ? start < o.start : end < o.end);
  }
  bool operator==(const RelBlock& o) const {
    return factor == o.factor && start == o.start && end == o.end;
  }
};

class RootDatum {
 public:
  explicit RootDatum(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  int num_factors() const { return static_cast<int>(spec_.factors.size()); }
  int degree(int f) const { return spec_.factors[f].degree; }
  int rank(int f) const { return spec_.factors[f].rank; }
  int dimension() const { return N_; }
  int factor_offset(int f) const { return factor_offset_[f]; }
  int coord(int f, int block, int pos) const {
    return factor_offset_[f] + block * rank(f) + pos;
  }

  const std::vector<SimpleRoot>& simple() const { return simple_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  int root_index(int f, int block, int pos) const;
  // Absolute simple-root indices in the Gamma_0-orbit of the given root.
  std::vector<int> rel_orbit(int root) const;
  std::vector<int> rel_orbit(const RelRoot& r) const;
  RelRoot rel_root_of(int root) const;
  std::vector<RelRoot> relative_simple() const;

  // Gamma_0 action.
  std::vector<GammaElt> gamma_elements() const;  // the whole group
  GammaElt gamma_identity() const { return GammaElt(num_factors(), 0); }
  int gamma_coord(const GammaElt& g, int c) const;  // image coordinate
  RatVec gamma_apply(const GammaElt& g, const RatVec& v) const;
  IntVec gamma_apply(const GammaElt& g, const IntVec& v) const;
  LeviSet gamma_apply(const GammaElt& g, const LeviSet& S) const;
  bool is_gamma_fixed(const RatVec& v) const;

  // Relative Weyl group action on vectors (diagonal across blocks).
  RatVec rel_apply(const RelPerm& w, const RatVec& v) const;
  IntVec rel_apply(const RelPerm& w, const IntVec& v) const;
  RelPerm rel_identity() const;
  RelPerm rel_compose(const RelPerm& a, const RelPerm& b) const;  // a after b
  RelPerm rel_inverse(const RelPerm& w) const;

  LeviSet full_levi() const;
  bool is_gamma_stable(const LeviSet& S) const;
  LeviSet gamma_closure(const LeviSet& S) const;
  // Blocks of the standard Levi M_S as profile intervals (requires S stable).
  std::vector<RelBlock> rel_blocks(const LeviSet& S) const;
  // Absolute Levi intervals per (factor, block): global coordinate ranges.
  std::vector<std::pair<int, int>> abs_intervals(const LeviSet& S) const;

  // Factor profile: per-position average across the factor's blocks.  Equals
  // the common block slice when v is Gamma_0-fixed.
  RatVec factor_profile(int f, const RatVec& v) const;
  RatVec broadcast_profile(const std::vector<RatVec>& profiles) const;

  void check_vec(size_t n) const;

 private:
  GroupSpec spec_;
  int N_ = 0;
  std::vector<int> factor_offset_;
  std::vector<SimpleRoot> simple_;
};

// -- Core operations -------------------------------------------------------

// Average of v over the Gamma_0-orbit.
RatVec gamma_average(const RootDatum& rd, const RatVec& v);

// theta_{M_S}(v): Gamma_0-average followed by the W^rel_{M_S}-average.
// Requires S Gamma_0-stable.
RatVec theta(const RootDatum& rd, const LeviSet& S, const RatVec& v);
RatVec theta(const RootDatum& rd, const LeviSet& S, const IntVec& v);

// Unique M_S-dominant representative in the W^abs_{M_S}-orbit: sorts each
// absolute Levi interval in weakly decreasing order.
IntVec dominant_rep(const RootDatum& rd, const LeviSet& S, const IntVec& mu);
RatVec dominant_rep(const RootDatum& rd, const LeviSet& S, const RatVec& mu);
bool is_dominant(const RootDatum& rd, const LeviSet& S, const RatVec& v);
bool is_dominant(const RootDatum& rd, const LeviSet& S, const IntVec& v);

// W^abs_{M_S}-conjugacy: per absolute Levi interval, equal coordinate multisets.
bool is_conjugate_in_levi(const RootDatum& rd, const LeviSet& S, const IntVec& a,
                          const IntVec& b);
bool is_conjugate_in_levi(const RootDatum& rd, const LeviSet& S, const RatVec& a,
                          const RatVec& b);

// x <= y in the absolute order on the ambient Levi M_amb: y - x is a
// non-negative rational combination of the simple coroots indexed by amb.
bool preceq_abs(const RootDatum& rd, const RatVec& x, const RatVec& y, const LeviSet& amb);
bool preceq_abs(const RootDatum& rd, const RatVec& x, const RatVec& y);

// Relative order on Gamma_0-fixed vectors: y - x is a non-negative rational
// combination of the relative simple coroots of M_amb (coroot orbit sums).
bool preceq_rel(const RootDatum& rd, const RatVec& x, const RatVec& y, const LeviSet& amb);
bool preceq_rel(const RootDatum& rd, const RatVec& x, const RatVec& y);

// <rho_{M_S}, v> where rho_{M_S} is the half-sum of positive absolute roots.
Rat rho_pairing(const RootDatum& rd, const LeviSet& S, const RatVec& v);
Rat rho_pairing(const RootDatum& rd, const LeviSet& S, const IntVec& v);
RatVec rho_vec(const RootDatum& rd, const LeviSet& S);

// Pairing of v with the absolute simple root alpha (index into simple()).
Rat root_pairing(const RootDatum& rd, int root, const RatVec& v);

// sigma_{res(alpha)}: product of the reflections in the Gamma_0-orbit of
// alpha when the orbit is pairwise orthogonal; braided word for a two-element
// adjacent orbit.  Returns a coordinate permutation p with p[i] = image of i.
std::vector<int> relative_reflection(const RootDatum& rd, int root);

// Coefficient of the restricted fundamental weight: 1 when the orbit of alpha
// is pairwise orthogonal, 2 in the adjacent two-element case.
int fundamental_weight_restriction(const RootDatum& rd, int root);

// All elements of W^rel_{M_S} (requires S Gamma_0-stable).
std::vector<RelPerm> enumerate_rel_weyl(const RootDatum& rd, const LeviSet& S);

}  // namespace cochar
