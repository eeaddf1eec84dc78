#include "cochar/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cochar {

RootDatum::RootDatum(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.factors.empty()) throw std::invalid_argument("group must have at least one factor");
  for (const auto& f : spec_.factors)
    if (f.degree < 1 || f.rank < 1) throw std::invalid_argument("factor degree/rank must be >= 1");
  for (int f = 0; f < num_factors(); ++f) {
    factor_offset_.push_back(N_);
    N_ += degree(f) * rank(f);
  }
  for (int f = 0; f < num_factors(); ++f)
    for (int b = 0; b < degree(f); ++b)
      for (int p = 0; p + 1 < rank(f); ++p)
        simple_.push_back({f, b, p, coord(f, b, p), coord(f, b, p + 1)});
}

int RootDatum::root_index(int f, int block, int pos) const {
  for (int r = 0; r < num_simple(); ++r) {
    const auto& s = simple_[r];
    if (s.factor == f && s.block == block && s.pos == pos) return r;
  }
  throw std::out_of_range("no such simple root");
}

std::vector<int> RootDatum::rel_orbit(int root) const {
  const auto& s = simple_.at(root);
  return rel_orbit(RelRoot{s.factor, s.pos});
}

std::vector<int> RootDatum::rel_orbit(const RelRoot& r) const {
  std::vector<int> out;
  for (int b = 0; b < degree(r.factor); ++b) out.push_back(root_index(r.factor, b, r.pos));
  return out;
}

RelRoot RootDatum::rel_root_of(int root) const {
  const auto& s = simple_.at(root);
  return {s.factor, s.pos};
}

std::vector<RelRoot> RootDatum::relative_simple() const {
  std::vector<RelRoot> out;
  for (int f = 0; f < num_factors(); ++f)
    for (int p = 0; p + 1 < rank(f); ++p) out.push_back({f, p});
  return out;
}

std::vector<GammaElt> RootDatum::gamma_elements() const {
  std::vector<GammaElt> out{gamma_identity()};
  for (int f = 0; f < num_factors(); ++f) {
    std::vector<GammaElt> next;
    for (const auto& g : out)
      for (int s = 0; s < degree(f); ++s) {
        GammaElt h = g;
        h[f] = s;
        next.push_back(h);
      }
    out = next;
  }
  return out;
}

int RootDatum::gamma_coord(const GammaElt& g, int c) const {
  for (int f = 0; f < num_factors(); ++f) {
    int lo = factor_offset_[f], hi = lo + degree(f) * rank(f);
    if (c >= lo && c < hi) {
      int local = c - lo;
      int b = local / rank(f), p = local % rank(f);
      return coord(f, (b + g[f]) % degree(f), p);
    }
  }
  throw std::out_of_range("coordinate out of range");
}

RatVec RootDatum::gamma_apply(const GammaElt& g, const RatVec& v) const {
  check_vec(v.size());
  RatVec out(N_);
  for (int c = 0; c < N_; ++c) out[gamma_coord(g, c)] = v[c];
  return out;
}

IntVec RootDatum::gamma_apply(const GammaElt& g, const IntVec& v) const {
  check_vec(v.size());
  IntVec out(N_);
  for (int c = 0; c < N_; ++c) out[gamma_coord(g, c)] = v[c];
  return out;
}

LeviSet RootDatum::gamma_apply(const GammaElt& g, const LeviSet& S) const {
  LeviSet out;
  for (int r : S) {
    const auto& s = simple_.at(r);
    out.insert(root_index(s.factor, (s.block + g[s.factor]) % degree(s.factor), s.pos));
  }
  return out;
}

bool RootDatum::is_gamma_fixed(const RatVec& v) const {
  check_vec(v.size());
  for (int f = 0; f < num_factors(); ++f)
    for (int b = 1; b < degree(f); ++b)
      for (int p = 0; p < rank(f); ++p)
        if (v[coord(f, b, p)] != v[coord(f, 0, p)]) return false;
  return true;
}

RatVec RootDatum::rel_apply(const RelPerm& w, const RatVec& v) const {
  check_vec(v.size());
  RatVec out(N_);
  for (int f = 0; f < num_factors(); ++f)
    for (int b = 0; b < degree(f); ++b)
      for (int p = 0; p < rank(f); ++p) out[coord(f, b, w[f][p])] = v[coord(f, b, p)];
  return out;
}

IntVec RootDatum::rel_apply(const RelPerm& w, const IntVec& v) const {
  check_vec(v.size());
  IntVec out(N_);
  for (int f = 0; f < num_factors(); ++f)
    for (int b = 0; b < degree(f); ++b)
      for (int p = 0; p < rank(f); ++p) out[coord(f, b, w[f][p])] = v[coord(f, b, p)];
  return out;
}

RelPerm RootDatum::rel_identity() const {
  RelPerm w(num_factors());
  for (int f = 0; f < num_factors(); ++f) {
    w[f].resize(rank(f));
    std::iota(w[f].begin(), w[f].end(), 0);
  }
  return w;
}

RelPerm RootDatum::rel_compose(const RelPerm& a, const RelPerm& b) const {
  RelPerm out(num_factors());
  for (int f = 0; f < num_factors(); ++f) {
    out[f].resize(rank(f));
    for (int p = 0; p < rank(f); ++p) out[f][p] = a[f][b[f][p]];
  }
  return out;
}

RelPerm RootDatum::rel_inverse(const RelPerm& w) const {
  RelPerm out(num_factors());
  for (int f = 0; f < num_factors(); ++f) {
    out[f].resize(rank(f));
    for (int p = 0; p < rank(f); ++p) out[f][w[f][p]] = p;
  }
  return out;
}

LeviSet RootDatum::full_levi() const {
  LeviSet S;
  for (int r = 0; r < num_simple(); ++r) S.insert(r);
  return S;
}

bool RootDatum::is_gamma_stable(const LeviSet& S) const {
  for (int r : S)
    for (int o : rel_orbit(r))
      if (!S.count(o)) return false;
  return true;
}

LeviSet RootDatum::gamma_closure(const LeviSet& S) const {
  LeviSet out;
  for (int r : S)
    for (int o : rel_orbit(r)) out.insert(o);
  return out;
}

std::vector<RelBlock> RootDatum::rel_blocks(const LeviSet& S) const {
  if (!is_gamma_stable(S)) throw std::invalid_argument("Levi set is not Gamma_0-stable");
  std::vector<RelBlock> out;
  for (int f = 0; f < num_factors(); ++f) {
    int start = 0;
    for (int p = 0; p < rank(f); ++p) {
      bool joined = p + 1 < rank(f) && S.count(root_index(f, 0, p));
      if (!joined) {
        out.push_back({f, start, p + 1});
        start = p + 1;
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> RootDatum::abs_intervals(const LeviSet& S) const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < num_factors(); ++f)
    for (int b = 0; b < degree(f); ++b) {
      int start = 0;
      for (int p = 0; p < rank(f); ++p) {
        bool joined = p + 1 < rank(f) && S.count(root_index(f, b, p));
        if (!joined) {
          out.push_back({coord(f, b, start), coord(f, b, p) + 1});
          start = p + 1;
        }
      }
    }
  return out;
}

RatVec RootDatum::factor_profile(int f, const RatVec& v) const {
  check_vec(v.size());
  RatVec out(rank(f), 0);
  for (int b = 0; b < degree(f); ++b)
    for (int p = 0; p < rank(f); ++p) out[p] += v[coord(f, b, p)];
  for (auto& x : out) x /= degree(f);
  return out;
}

RatVec RootDatum::broadcast_profile(const std::vector<RatVec>& profiles) const {
  RatVec out(N_);
  for (int f = 0; f < num_factors(); ++f) {
    if (static_cast<int>(profiles[f].size()) != rank(f))
      throw std::invalid_argument("profile size mismatch");
    for (int b = 0; b < degree(f); ++b)
      for (int p = 0; p < rank(f); ++p) out[coord(f, b, p)] = profiles[f][p];
  }
  return out;
}

void RootDatum::check_vec(size_t n) const {
  if (static_cast<int>(n) != N_) throw std::invalid_argument("vector dimension mismatch");
}

// -- Core operations -------------------------------------------------------

RatVec gamma_average(const RootDatum& rd, const RatVec& v) {
  std::vector<RatVec> profiles;
  for (int f = 0; f < rd.num_factors(); ++f) profiles.push_back(rd.factor_profile(f, v));
  return rd.broadcast_profile(profiles);
}

RatVec theta(const RootDatum& rd, const LeviSet& S, const RatVec& v) {
  auto blocks = rd.rel_blocks(S);
  std::vector<RatVec> profiles;
  for (int f = 0; f < rd.num_factors(); ++f) profiles.push_back(rd.factor_profile(f, v));
  for (const auto& blk : blocks) {
    Rat mean = 0;
    for (int p = blk.start; p < blk.end; ++p) mean += profiles[blk.factor][p];
    mean /= blk.size();
    for (int p = blk.start; p < blk.end; ++p) profiles[blk.factor][p] = mean;
  }
  return rd.broadcast_profile(profiles);
}

RatVec theta(const RootDatum& rd, const LeviSet& S, const IntVec& v) {
  return theta(rd, S, to_rat(v));
}

template <typename Vec>
static Vec dominant_rep_impl(const RootDatum& rd, const LeviSet& S, const Vec& mu) {
  rd.check_vec(mu.size());
  Vec out = mu;
  for (auto [lo, hi] : rd.abs_intervals(S))
    std::sort(out.begin() + lo, out.begin() + hi,
              [](const auto& a, const auto& b) { return b < a; });
  return out;
}

IntVec dominant_rep(const RootDatum& rd, const LeviSet& S, const IntVec& mu) {
  return dominant_rep_impl(rd, S, mu);
}
RatVec dominant_rep(const RootDatum& rd, const LeviSet& S, const RatVec& mu) {
  return dominant_rep_impl(rd, S, mu);
}

template <typename Vec>
static bool is_dominant_impl(const RootDatum& rd, const LeviSet& S, const Vec& v) {
  rd.check_vec(v.size());
  for (int r : S) {
    const auto& s = rd.simple()[r];
    if (v[s.i] < v[s.j]) return false;
  }
  return true;
}

bool is_dominant(const RootDatum& rd, const LeviSet& S, const RatVec& v) {
  return is_dominant_impl(rd, S, v);
}
bool is_dominant(const RootDatum& rd, const LeviSet& S, const IntVec& v) {
  return is_dominant_impl(rd, S, v);
}

template <typename Vec>
static bool conj_impl(const RootDatum& rd, const LeviSet& S, const Vec& a, const Vec& b) {
  rd.check_vec(a.size());
  rd.check_vec(b.size());
  for (auto [lo, hi] : rd.abs_intervals(S)) {
    Vec x(a.begin() + lo, a.begin() + hi), y(b.begin() + lo, b.begin() + hi);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

bool is_conjugate_in_levi(const RootDatum& rd, const LeviSet& S, const IntVec& a,
                          const IntVec& b) {
  return conj_impl(rd, S, a, b);
}
bool is_conjugate_in_levi(const RootDatum& rd, const LeviSet& S, const RatVec& a,
                          const RatVec& b) {
  return conj_impl(rd, S, a, b);
}

bool preceq_abs(const RootDatum& rd, const RatVec& x, const RatVec& y, const LeviSet& amb) {
  rd.check_vec(x.size());
  rd.check_vec(y.size());
  // y - x = sum of non-negative multiples of simple coroots e_i - e_{i+1}
  // indexed by amb iff within every absolute amb-interval the prefix sums of
  // y - x are >= 0 with total 0, and y = x outside the intervals' span.
  for (auto [lo, hi] : rd.abs_intervals(amb)) {
    Rat prefix = 0;
    for (int c = lo; c < hi; ++c) {
      prefix += y[c] - x[c];
      if (c + 1 < hi && prefix < 0) return false;
    }
    if (prefix != 0) return false;
  }
  return true;
}

bool preceq_abs(const RootDatum& rd, const RatVec& x, const RatVec& y) {
  return preceq_abs(rd, x, y, rd.full_levi());
}

bool preceq_rel(const RootDatum& rd, const RatVec& x, const RatVec& y, const LeviSet& amb) {
  if (!rd.is_gamma_fixed(x) || !rd.is_gamma_fixed(y))
    throw std::invalid_argument("relative order requires Gamma_0-fixed vectors");
  // Relative simple coroots are orbit sums of absolute coroots; on profiles
  // the criterion is again prefix sums >= 0 per relative amb-block, total 0.
  for (const auto& blk : rd.rel_blocks(amb)) {
    RatVec px = rd.factor_profile(blk.factor, x), py = rd.factor_profile(blk.factor, y);
    Rat prefix = 0;
    for (int p = blk.start; p < blk.end; ++p) {
      prefix += py[p] - px[p];
      if (p + 1 < blk.end && prefix < 0) return false;
    }
    if (prefix != 0) return false;
  }
  return true;
}

bool preceq_rel(const RootDatum& rd, const RatVec& x, const RatVec& y) {
  return preceq_rel(rd, x, y, rd.full_levi());
}

RatVec rho_vec(const RootDatum& rd, const LeviSet& S) {
  RatVec out(rd.dimension(), 0);
  for (auto [lo, hi] : rd.abs_intervals(S)) {
    int m = hi - lo;
    for (int c = lo; c < hi; ++c) out[c] = Rat(m - 1 - 2 * (c - lo), 2);
  }
  return out;
}

Rat rho_pairing(const RootDatum& rd, const LeviSet& S, const RatVec& v) {
  return dot(rho_vec(rd, S), v);
}
Rat rho_pairing(const RootDatum& rd, const LeviSet& S, const IntVec& v) {
  return rho_pairing(rd, S, to_rat(v));
}

Rat root_pairing(const RootDatum& rd, int root, const RatVec& v) {
  const auto& s = rd.simple().at(root);
  return v[s.i] - v[s.j];
}

std::vector<int> relative_reflection(const RootDatum& rd, int root) {
  auto orbit = rd.rel_orbit(root);
  std::vector<std::pair<int, int>> pairs;
  for (int r : orbit) pairs.emplace_back(rd.simple()[r].i, rd.simple()[r].j);
  bool orthogonal = true;
  for (size_t a = 0; a < pairs.size() && orthogonal; ++a)
    for (size_t b = a + 1; b < pairs.size() && orthogonal; ++b) {
      auto [i1, j1] = pairs[a];
      auto [i2, j2] = pairs[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) orthogonal = false;
    }
  std::vector<int> perm(rd.dimension());
  std::iota(perm.begin(), perm.end(), 0);
  if (orthogonal) {
    for (auto [i, j] : pairs) std::swap(perm[i], perm[j]);
    return perm;
  }
  if (pairs.size() == 2) {
    // Adjacent two-element orbit: sigma_beta sigma_alpha sigma_beta is the
    // transposition exchanging the two outer coordinates.
    auto [i1, j1] = pairs[0];
    auto [i2, j2] = pairs[1];
    int shared = (j1 == i2 || j1 == j2) ? j1 : i1;
    int a = (i1 == shared) ? j1 : i1;
    int b = (i2 == shared) ? j2 : i2;
    std::swap(perm[a], perm[b]);
    return perm;
  }
  throw std::domain_error("unsupported Gamma_0-orbit shape for relative reflection");
}

int fundamental_weight_restriction(const RootDatum& rd, int root) {
  auto orbit = rd.rel_orbit(root);
  std::vector<std::pair<int, int>> pairs;
  for (int r : orbit) pairs.emplace_back(rd.simple()[r].i, rd.simple()[r].j);
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i1, j1] = pairs[a];
      auto [i2, j2] = pairs[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) return 2;
    }
  return 1;
}

std::vector<RelPerm> enumerate_rel_weyl(const RootDatum& rd, const LeviSet& S) {
  auto blocks = rd.rel_blocks(S);
  std::vector<RelPerm> out{rd.rel_identity()};
  for (const auto& blk : blocks) {
    std::vector<int> idx(blk.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> block_perms;
    do {
      block_perms.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::vector<RelPerm> next;
    for (const auto& w : out)
      for (const auto& bp : block_perms) {
        RelPerm v = w;
        for (int k = 0; k < blk.size(); ++k) v[blk.factor][blk.start + k] = blk.start + bp[k];
        next.push_back(v);
      }
    out = next;
  }
  return out;
}

}  // namespace cochar
