#include "cochar/kottwitz.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cochar/snf.hpp"

namespace cochar {

namespace {

long long floor_div(long long a, long long b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long long rat_floor(const Rat& x) {
  BigInt n = boost::multiprecision::numerator(x);
  BigInt d = boost::multiprecision::denominator(x);  // always positive
  BigInt f = n >= 0 ? BigInt(n / d) : BigInt(-((-n + d - 1) / d));
  return static_cast<long long>(f);
}

// Largest integer strictly below x.
long long strict_floor(const Rat& x) {
  long long f = rat_floor(x);
  return Rat(f) == x ? f - 1 : f;
}

// Per-relative-block coordinate sums of a Gamma_0-fixed rational vector;
// throws if any sum is not an integer.
IntVec kappa_of(const RootDatum& rd, const LeviSet& S, const RatVec& v) {
  IntVec out;
  for (const RelBlock& rb : rd.rel_blocks(S)) {
    Rat s = 0;
    for (int k = 0; k < rd.degree(rb.factor); ++k)
      for (int p = rb.start; p < rb.end; ++p) s += v[rd.coord(rb.factor, k, p)];
    if (boost::multiprecision::denominator(s) != 1)
      throw std::domain_error("kappa_of: non-integral block sum");
    out.push_back(rat_floor(s));
  }
  return out;
}

}  // namespace

CenterLattice center_character_lattice(const RootDatum& rd, const LeviSet& S) {
  if (!rd.is_gamma_stable(S))
    throw std::domain_error("center_character_lattice: Levi set not Gamma_0-stable");
  CenterLattice L{S, rd.rel_blocks(S)};

  // Relation lattice in X_*(T): the coroots of M_S together with the
  // Gamma_0-coinvariant relations (g - 1)e_c for a generator g per factor.
  const int N = rd.dimension();
  std::vector<IntVec> cols;
  for (int r : S) {
    IntVec col(N, 0);
    col[rd.simple()[r].i] = 1;
    col[rd.simple()[r].j] = -1;
    cols.push_back(col);
  }
  for (int f = 0; f < rd.num_factors(); ++f) {
    if (rd.degree(f) == 1) continue;
    GammaElt g = rd.gamma_identity();
    g[f] = 1;
    for (int k = 0; k < rd.degree(f); ++k)
      for (int p = 0; p < rd.rank(f); ++p) {
        int c = rd.coord(f, k, p);
        IntVec col(N, 0);
        col[rd.gamma_coord(g, c)] += 1;
        col[c] -= 1;
        cols.push_back(col);
      }
  }
  IMat A(N, std::vector<BigInt>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < N; ++i) A[i][j] = cols[j][i];

  SnfResult snf = smith_diagonalize(A);
  const int nb = L.rank();
  if (snf.rank != N - nb)
    throw std::domain_error("center_character_lattice: unexpected quotient rank");
  for (const BigInt& d : snf.diag)
    if (abs(d) != 1)
      throw std::domain_error("center_character_lattice: torsion in quotient");

  // The block-sum coordinates must form a basis of the free quotient: evaluate
  // them on the section columns of U^{-1} and require a unimodular transition.
  IMat C(nb, std::vector<BigInt>(nb));
  for (int b = 0; b < nb; ++b) {
    const RelBlock& rb = L.blocks[b];
    for (int q = 0; q < nb; ++q) {
      BigInt s = 0;
      for (int k = 0; k < rd.degree(rb.factor); ++k)
        for (int p = rb.start; p < rb.end; ++p)
          s += snf.Uinv[rd.coord(rb.factor, k, p)][snf.rank + q];
      C[b][q] = s;
    }
  }
  if (abs(int_det(C)) != 1)
    throw std::domain_error("center_character_lattice: block sums not unimodular");
  return L;
}

IntVec kappa_at(const RootDatum& rd, const LeviSet& S, const IntVec& mu) {
  rd.check_vec(mu.size());
  return kappa_of(rd, S, to_rat(mu));
}

RatVec map_to_A(const RootDatum& rd, const CenterLattice& L, const IntVec& chi) {
  if (chi.size() != static_cast<size_t>(L.rank()))
    throw std::invalid_argument("map_to_A: wrong coordinate count");
  RatVec lift(rd.dimension(), Rat(0));
  for (int b = 0; b < L.rank(); ++b)
    lift[rd.coord(L.blocks[b].factor, 0, L.blocks[b].start)] = Rat(chi[b]);
  return theta(rd, L.levi, lift);
}

std::vector<IsocrystalClass> enumerate_B(const RootDatum& rd, const IntVec& mu,
                                         const LeviSet& amb) {
  if (!rd.is_gamma_stable(amb))
    throw std::domain_error("enumerate_B: ambient Levi not Gamma_0-stable");
  IntVec mu_dom = dominant_rep(rd, amb, mu);

  // Per relative block of the ambient Levi, enumerate the possible Newton
  // profiles: consecutive sub-blocks of strictly decreasing slope k/(d*m),
  // with prefix sums bounded by the averaged profile of mu and total sum equal
  // to its kappa invariant.
  std::vector<RelBlock> blocks = rd.rel_blocks(amb);
  std::vector<std::vector<RatVec>> piece_profiles;  // per block: candidate profiles
  for (const RelBlock& rb : blocks) {
    const int d = rd.degree(rb.factor);
    const int e = rb.size();
    RatVec avg = rd.factor_profile(rb.factor, to_rat(mu_dom));
    RatVec target(e + 1, Rat(0));  // prefix sums of the averaged profile
    for (int t = 0; t < e; ++t) target[t + 1] = target[t] + avg[rb.start + t];
    long long kappa_tot = 0;
    for (int k = 0; k < d; ++k)
      for (int p = rb.start; p < rb.end; ++p)
        kappa_tot += mu_dom[rd.coord(rb.factor, k, p)];

    std::vector<RatVec> out;
    RatVec profile(e);
    auto rec = [&](auto&& self, int t, const Rat& prefix, long long kappa_used,
                   std::optional<Rat> prev_slope) -> void {
      if (t == e) {
        out.push_back(profile);
        return;
      }
      for (int m = 1; m <= e - t; ++m) {
        long long kappa_rem = kappa_tot - kappa_used;
        long long k_lo, k_hi;
        if (t + m == e) {
          k_lo = k_hi = kappa_rem;  // last sub-block: forced by the kappa condition
        } else {
          // Later slopes are strictly smaller, so the remaining average
          // slope bounds k from below; the prefix constraint and slope
          // monotonicity bound it from above.
          k_lo = floor_div(kappa_rem * m, e - t) + 1;
          k_hi = rat_floor(Rat(d) * (target[t + m] - prefix));
        }
        if (prev_slope)
          k_hi = std::min(k_hi, strict_floor(*prev_slope * d * m));
        for (long long k = k_lo; k <= k_hi; ++k) {
          Rat slope = Rat(k, static_cast<long long>(d) * m);
          if (prev_slope && !(slope < *prev_slope)) continue;
          Rat end_prefix = prefix + Rat(k, d);
          if (end_prefix > target[t + m]) continue;
          if (t + m == e && end_prefix != target[e]) continue;
          for (int s = 0; s < m; ++s) profile[t + s] = slope;
          self(self, t + m, end_prefix, kappa_used + k, slope);
        }
      }
    };
    rec(rec, 0, Rat(0), 0, std::nullopt);
    piece_profiles.push_back(std::move(out));
  }

  // Cartesian product across blocks, broadcast to a Gamma_0-fixed vector.
  std::vector<IsocrystalClass> result;
  std::vector<size_t> idx(blocks.size(), 0);
  while (true) {
    RatVec nu(rd.dimension(), Rat(0));
    for (size_t b = 0; b < blocks.size(); ++b) {
      const RelBlock& rb = blocks[b];
      const RatVec& prof = piece_profiles[b][idx[b]];
      for (int k = 0; k < rd.degree(rb.factor); ++k)
        for (int p = 0; p < rb.size(); ++p)
          nu[rd.coord(rb.factor, k, rb.start + p)] = prof[p];
    }
    LeviSet levi;
    for (int r : amb)
      if (nu[rd.simple()[r].i] == nu[rd.simple()[r].j]) levi.insert(r);
    result.push_back({amb, levi, nu, kappa_of(rd, amb, nu)});

    size_t b = 0;
    while (b < blocks.size() && ++idx[b] == piece_profiles[b].size()) idx[b++] = 0;
    if (b == blocks.size()) break;
  }
  std::sort(result.begin(), result.end(),
            [](const IsocrystalClass& a, const IsocrystalClass& b) {
              return b.newton < a.newton;  // lexicographically decreasing
            });
  return result;
}

std::vector<IsocrystalClass> enumerate_B(const RootDatum& rd, const IntVec& mu) {
  return enumerate_B(rd, mu, rd.full_levi());
}

IsocrystalClass T_map(const RootDatum& rd, const CocharacterPair& p, const LeviSet& amb) {
  if (!validate_pair(rd, p)) throw std::domain_error("T_map: invalid pair");
  RatVec nu = theta(rd, p);
  return {amb, p.S, nu, kappa_of(rd, amb, nu)};
}

IsocrystalClass T_map(const RootDatum& rd, const CocharacterPair& p) {
  return T_map(rd, p, rd.full_levi());
}

std::vector<CocharacterPair> fiber_T(const RootDatum& rd, const IsocrystalClass& b,
                                     const IntVec& mu, const LeviSet& amb) {
  std::vector<CocharacterPair> out;
  for (const CocharacterPair& p : sd_set(rd, mu, amb))
    if (T_map(rd, p, amb) == b) out.push_back(p);
  return out;
}

std::vector<CocharacterPair> fiber_T(const RootDatum& rd, const IsocrystalClass& b,
                                     const IntVec& mu) {
  return fiber_T(rd, b, mu, rd.full_levi());
}

IsocrystalClass b_transfer(const RootDatum& rd, const IsocrystalClass& b, const LeviSet& S) {
  if (!rd.is_gamma_stable(S)) throw std::domain_error("b_transfer: Levi not stable");
  if (!std::includes(S.begin(), S.end(), b.levi.begin(), b.levi.end()) ||
      !std::includes(b.ambient.begin(), b.ambient.end(), S.begin(), S.end()))
    throw std::domain_error("b_transfer: need S_b <= S <= ambient");
  return {S, b.levi, b.newton, kappa_of(rd, S, b.newton)};
}

bool B_member(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu_S) {
  rd.check_vec(mu_S.size());
  if (kappa_at(rd, b.ambient, mu_S) != b.kappa) return false;
  RatVec avg = dominant_rep(rd, b.ambient, gamma_average(rd, to_rat(mu_S)));
  return preceq_rel(rd, b.newton, avg, b.ambient);
}

OpenQuestionResult test_open_question(const RootDatum& rd, const IntVec& mu,
                                      const LeviSet& amb) {
  std::vector<IsocrystalClass> bset = enumerate_B(rd, mu, amb);
  std::vector<IsocrystalClass> image;
  for (const CocharacterPair& p : sd_set(rd, mu, amb)) image.push_back(T_map(rd, p, amb));

  auto key = [](const IsocrystalClass& a, const IsocrystalClass& b) { return a < b; };
  std::sort(bset.begin(), bset.end(), key);
  std::sort(image.begin(), image.end(), key);
  image.erase(std::unique(image.begin(), image.end()), image.end());

  OpenQuestionResult res;
  std::set_difference(bset.begin(), bset.end(), image.begin(), image.end(),
                      std::back_inserter(res.uncovered), key);
  std::set_difference(image.begin(), image.end(), bset.begin(), bset.end(),
                      std::back_inserter(res.extra), key);
  res.equal = res.uncovered.empty() && res.extra.empty();
  return res;
}

OpenQuestionResult test_open_question(const RootDatum& rd, const IntVec& mu) {
  return test_open_question(rd, mu, rd.full_levi());
}

}  // namespace cochar
