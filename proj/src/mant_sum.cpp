#include "cochar/mant_sum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cochar {

int rel_root_count(const RootDatum& rd, const LeviSet& S1, const LeviSet& S2) {
  std::set<RelRoot> orbits;
  for (int r : S2)
    if (!S1.count(r)) orbits.insert(rd.rel_root_of(r));
  return static_cast<int>(orbits.size());
}

std::vector<IntVec> dominant_conjugates(const RootDatum& rd, const LeviSet& amb,
                                        const LeviSet& S, const IntVec& mu) {
  rd.check_vec(mu.size());
  if (!std::includes(amb.begin(), amb.end(), S.begin(), S.end()))
    throw std::domain_error("dominant_conjugates: S not contained in amb");

  // Per absolute interval of M_amb: the distinct rearrangements that are
  // weakly decreasing on every S-subinterval.
  auto amb_iv = rd.abs_intervals(amb);
  auto s_iv = rd.abs_intervals(S);
  std::vector<std::vector<IntVec>> choices;  // per amb interval
  for (auto [lo, hi] : amb_iv) {
    IntVec vals(mu.begin() + lo, mu.begin() + hi);
    std::sort(vals.begin(), vals.end());
    std::vector<IntVec> ok;
    do {
      bool dom = true;
      for (auto [slo, shi] : s_iv) {
        if (slo < lo || shi > hi) continue;
        for (int c = slo; c + 1 < shi && dom; ++c)
          if (vals[c - lo] < vals[c + 1 - lo]) dom = false;
      }
      if (dom) ok.push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    choices.push_back(std::move(ok));
  }

  std::vector<IntVec> out;
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    IntVec v = mu;
    for (size_t k = 0; k < choices.size(); ++k)
      std::copy(choices[k][idx[k]].begin(), choices[k][idx[k]].end(),
                v.begin() + amb_iv[k].first);
    out.push_back(std::move(v));
    size_t k = 0;
    while (k < choices.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == choices.size()) break;
  }
  return out;
}

std::vector<CocharacterPair> R_set(const RootDatum& rd, const IsocrystalClass& b,
                                   const IntVec& mu) {
  std::set<CocharacterPair> acc;
  for (const CocharacterPair& p : fiber_T(rd, b, mu, b.ambient))
    for (const CocharacterPair& q : down_set(rd, p).nodes) acc.insert(q);
  return {acc.begin(), acc.end()};
}

SignedPairSum M_sum(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu) {
  SignedPairSum out;
  for (const CocharacterPair& p : R_set(rd, b, mu))
    out.add(p, rel_root_count(rd, p.S, b.levi) % 2 == 0 ? 1 : -1);
  return out;
}

SumCheck verify_sum_formula(const RootDatum& rd, const IntVec& mu, const LeviSet& amb) {
  SignedPairSum total;
  for (const IsocrystalClass& b : enumerate_B(rd, mu, amb)) {
    SignedPairSum m = M_sum(rd, b, mu);
    for (const auto& [p, c] : m.coeff) total.add(p, c);
  }
  total.add({amb, dominant_rep(rd, amb, mu)}, -1);
  return {total.empty(), std::move(total)};
}

SumCheck verify_sum_formula(const RootDatum& rd, const IntVec& mu) {
  return verify_sum_formula(rd, mu, rd.full_levi());
}

std::vector<CocharacterPair> I_set(const RootDatum& rd, const LeviSet& S,
                                   const IsocrystalClass& b, const IntVec& mu) {
  if (!std::includes(S.begin(), S.end(), b.levi.begin(), b.levi.end()))
    throw std::domain_error("I_set: S must contain S_b");
  IsocrystalClass b_S = b_transfer(rd, b, S);
  std::vector<CocharacterPair> out;
  for (const IntVec& mu_S : dominant_conjugates(rd, b.ambient, S, mu))
    if (B_member(rd, b_S, mu_S)) out.push_back({S, mu_S});
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_induction_formula(const RootDatum& rd, const LeviSet& S,
                              const IsocrystalClass& b, const IntVec& mu) {
  IsocrystalClass b_S = b_transfer(rd, b, S);
  SignedPairSum lhs;
  for (const CocharacterPair& q : I_set(rd, S, b, mu)) {
    SignedPairSum m = M_sum(rd, b_S, q.mu);
    for (const auto& [p, c] : m.coeff) lhs.add(p, c);
  }
  return lhs == M_sum(rd, b, mu);
}

bool verify_I_transitivity(const RootDatum& rd, const LeviSet& S2, const LeviSet& S1,
                           const IsocrystalClass& b, const IntVec& mu) {
  if (!std::includes(S1.begin(), S1.end(), S2.begin(), S2.end()))
    throw std::domain_error("verify_I_transitivity: need S2 contained in S1");
  std::vector<CocharacterPair> whole = I_set(rd, S2, b, mu);
  IsocrystalClass b_S1 = b_transfer(rd, b, S1);
  std::vector<CocharacterPair> pieces;
  for (const CocharacterPair& q : I_set(rd, S1, b, mu))
    for (const CocharacterPair& r : I_set(rd, S2, b_S1, q.mu)) pieces.push_back(r);
  std::sort(pieces.begin(), pieces.end());
  if (std::adjacent_find(pieces.begin(), pieces.end()) != pieces.end())
    return false;  // inner I-sets must be disjoint
  return pieces == whole;
}

std::vector<SignedPairSum> product_decompose(const RootDatum& rd, const SignedPairSum& sum) {
  const int k = rd.num_factors();
  if (sum.empty()) throw std::domain_error("product_decompose: empty sum");

  // Split a pair into its per-factor components in the single-factor data.
  std::vector<RootDatum> locals;
  for (int f = 0; f < k; ++f) locals.emplace_back(GroupSpec{{rd.spec().factors[f]}});
  auto split = [&](const CocharacterPair& p) {
    std::vector<CocharacterPair> parts(k);
    for (int f = 0; f < k; ++f) {
      auto lo = p.mu.begin() + rd.factor_offset(f);
      parts[f].mu.assign(lo, lo + locals[f].dimension());
    }
    for (int r : p.S) {
      const SimpleRoot& sr = rd.simple()[r];
      parts[sr.factor].S.insert(locals[sr.factor].root_index(0, sr.block, sr.pos));
    }
    return parts;
  };

  std::vector<std::vector<CocharacterPair>> parts;
  std::vector<long long> coeffs;
  for (const auto& [p, c] : sum.coeff) {
    parts.push_back(split(p));
    coeffs.push_back(c);
  }
  const auto& p0 = parts[0];
  const long long c0 = coeffs[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("product_decompose: reference coefficient not a unit");

  // Read each factor sum off against the reference term: for a tensor sum,
  // coeff(x) = prod_f coeff(p0 with slot f replaced by x_f) * c0^{1-k}.
  // Fold the unit c0^{k-1} into the first factor.
  auto coeff_of = [&](const std::vector<CocharacterPair>& q) -> long long {
    for (size_t t = 0; t < parts.size(); ++t)
      if (parts[t] == q) return coeffs[t];
    return 0;
  };
  std::vector<SignedPairSum> factors(k);
  for (int f = 0; f < k; ++f) {
    std::set<CocharacterPair> support;
    for (const auto& q : parts) support.insert(q[f]);
    long long unit = 1;
    if (f == 0 && k % 2 == 0) unit = c0;  // c0^{k-1}
    for (const CocharacterPair& x : support) {
      std::vector<CocharacterPair> probe = p0;
      probe[f] = x;
      long long c = coeff_of(probe);
      if (c == 0) throw std::domain_error("product_decompose: support is not a product");
      factors[f].add(x, c * unit);
    }
  }

  // Verify exact recombination over the full product of supports.
  std::vector<std::vector<std::pair<CocharacterPair, long long>>> lists(k);
  for (int f = 0; f < k; ++f)
    lists[f].assign(factors[f].coeff.begin(), factors[f].coeff.end());
  size_t count = 1;
  for (int f = 0; f < k; ++f) count *= lists[f].size();
  if (count != parts.size())
    throw std::domain_error("product_decompose: support is not a product");
  std::vector<size_t> idx(k, 0);
  while (true) {
    std::vector<CocharacterPair> q(k);
    long long c = 1;
    for (int f = 0; f < k; ++f) {
      q[f] = lists[f][idx[f]].first;
      c *= lists[f][idx[f]].second;
    }
    if (coeff_of(q) != c)
      throw std::domain_error("product_decompose: coefficients do not factor");
    int f = 0;
    while (f < k && ++idx[f] == lists[f].size()) idx[f++] = 0;
    if (f == k) break;
  }
  return factors;
}

std::vector<CocharacterPair> rel_set(const RootDatum& rd, const LeviSet& S,
                                     const IsocrystalClass& b, const IntVec& mu) {
  if (!std::includes(b.levi.begin(), b.levi.end(), S.begin(), S.end()))
    throw std::domain_error("rel_set: need S contained in S_b");
  std::set<CocharacterPair> acc;
  for (const CocharacterPair& fp : fiber_T(rd, b, mu, b.ambient)) {
    RatVec target = theta(rd, fp);
    for (const IntVec& mu_S : dominant_conjugates(rd, fp.S, S, fp.mu))
      if (theta(rd, S, mu_S) == target) acc.insert({S, mu_S});
  }
  return {acc.begin(), acc.end()};
}

namespace {

// w increasing on every interval of S (as a position permutation per factor).
bool increasing_on(const RootDatum& rd, const RelPerm& w, const LeviSet& S) {
  for (const RelBlock& blk : rd.rel_blocks(S))
    for (int p = blk.start; p + 1 < blk.end; ++p)
      if (w[blk.factor][p] > w[blk.factor][p + 1]) return false;
  return true;
}

}  // namespace

WeylCosets weyl_cosets(const RootDatum& rd, const LeviSet& S, const LeviSet& N) {
  if (!rd.is_gamma_stable(S) || !rd.is_gamma_stable(N))
    throw std::domain_error("weyl_cosets: Levi sets must be Gamma_0-stable");
  WeylCosets out;
  for (const RelPerm& w : enumerate_rel_weyl(rd, rd.full_levi())) {
    if (!increasing_on(rd, w, S)) continue;
    out.WS.push_back(w);
    if (!increasing_on(rd, rd.rel_inverse(w), N)) continue;
    out.WSN.push_back(w);
    // w(M_S) inside M_N: each S-interval lands inside one N-interval.
    bool inside = true;
    auto n_blocks = rd.rel_blocks(N);
    for (const RelBlock& blk : rd.rel_blocks(S)) {
      int lo = rd.rank(blk.factor), hi = -1;
      for (int p = blk.start; p < blk.end; ++p) {
        lo = std::min(lo, w[blk.factor][p]);
        hi = std::max(hi, w[blk.factor][p]);
      }
      bool found = false;
      for (const RelBlock& nb : n_blocks)
        if (nb.factor == blk.factor && nb.start <= lo && hi < nb.end) found = true;
      if (!found) {
        inside = false;
        break;
      }
    }
    if (inside) out.Wb.push_back(w);
  }
  return out;
}

Transfer unique_transfer(const RootDatum& rd, const CocharacterPair& p, const IntVec& mu) {
  if (!is_conjugate_in_levi(rd, rd.full_levi(), p.mu, dominant_rep(rd, rd.full_levi(), mu)))
    throw std::domain_error("unique_transfer: cocharacter not conjugate to mu");
  std::vector<Transfer> hits;
  for (const IsocrystalClass& b : enumerate_B(rd, mu)) {
    for (const RelPerm& w : weyl_cosets(rd, p.S, b.levi).Wb) {
      CocharacterPair img;
      try {
        img = weyl_apply(rd, w, p);
      } catch (const std::invalid_argument&) {
        continue;  // image Levi not standard
      }
      auto rs = rel_set(rd, img.S, b, mu);
      if (std::binary_search(rs.begin(), rs.end(), img)) hits.push_back({b, w});
    }
  }
  if (hits.size() != 1) throw std::domain_error("unique_transfer: hit count != 1");
  return hits[0];
}

bool verify_sumrel_bijection(const RootDatum& rd, const LeviSet& S, const IntVec& mu) {
  const LeviSet full = rd.full_levi();
  std::vector<IntVec> source = dominant_conjugates(rd, full, S, mu);

  // Targets: one copy of each pair of rel_set(w(S), b, mu) per (b, w in W_b);
  // rel_sets are cached per (b, w(S)) since many w share an image Levi.
  struct Site {
    const IsocrystalClass* b;
    RelPerm w;
    const std::vector<CocharacterPair>* rel;
  };
  std::vector<IsocrystalClass> bs = enumerate_B(rd, mu);
  std::vector<Site> sites;
  std::vector<std::map<LeviSet, std::vector<CocharacterPair>>> caches(bs.size());
  for (size_t t = 0; t < bs.size(); ++t)
    for (const RelPerm& w : weyl_cosets(rd, S, bs[t].levi).Wb) {
      LeviSet wS;
      try {
        wS = weyl_apply_levi(rd, w, S);
      } catch (const std::invalid_argument&) {
        return false;  // W_b elements must standardize S
      }
      auto [it, fresh] = caches[t].try_emplace(wS);
      if (fresh) it->second = rel_set(rd, wS, bs[t], mu);
      sites.push_back({&bs[t], w, &it->second});
    }

  // Each source pair must land in exactly one site, and all together must
  // cover every (site, rel-pair) slot exactly once.
  using Tag = std::tuple<size_t, CocharacterPair>;
  std::multiset<Tag> images;
  for (const IntVec& mu_S : source) {
    size_t hits = 0, site_idx = 0;
    CocharacterPair image;
    for (size_t t = 0; t < sites.size(); ++t) {
      CocharacterPair img = weyl_apply(rd, sites[t].w, {S, mu_S});
      if (std::binary_search(sites[t].rel->begin(), sites[t].rel->end(), img)) {
        ++hits;
        site_idx = t;
        image = img;
      }
    }
    if (hits != 1) return false;  // existence + uniqueness of the transfer
    images.insert({site_idx, image});
  }
  for (const Tag& t : images)
    if (images.count(t) != 1) return false;  // injectivity
  size_t slots = 0;
  for (const Site& s : sites) slots += s.rel->size();
  return images.size() == slots;  // surjectivity
}

std::vector<GaloisOrbit> galois_orbit_partition(const RootDatum& rd,
                                                const std::vector<CocharacterPair>& pairs,
                                                const std::vector<GammaElt>& group) {
  std::set<CocharacterPair> remaining(pairs.begin(), pairs.end());
  std::vector<GaloisOrbit> orbits;
  while (!remaining.empty()) {
    CocharacterPair rep = *remaining.begin();
    GaloisOrbit orb;
    std::set<CocharacterPair> seen;
    for (const GammaElt& g : group) {
      CocharacterPair q = gamma_apply(rd, g, rep);
      if (q == rep) orb.stabilizer.push_back(g);
      if (!remaining.count(q))
        throw std::domain_error("galois_orbit_partition: set is not Gamma_0-stable");
      if (seen.insert(q).second) orb.members.push_back(q);
    }
    std::sort(orb.members.begin() + 1, orb.members.end());
    for (const CocharacterPair& q : orb.members) remaining.erase(q);
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<GaloisOrbit> galois_orbit_partition(const RootDatum& rd,
                                                const std::vector<CocharacterPair>& pairs) {
  return galois_orbit_partition(rd, pairs, rd.gamma_elements());
}

}  // namespace cochar
