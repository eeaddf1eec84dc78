#include "cochar/groth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cochar {

namespace {

struct AbsIv {
  int f, k, lo, hi;  // factor, block, position range [lo, hi)
};

// Absolute intervals of M_S with factor/block/position info, in the same
// order as RootDatum::abs_intervals.
std::vector<AbsIv> interval_list(const RootDatum& rd, const LeviSet& S) {
  std::vector<AbsIv> out;
  for (int f = 0; f < rd.num_factors(); ++f)
    for (int k = 0; k < rd.degree(f); ++k) {
      int start = 0;
      for (int p = 0; p < rd.rank(f); ++p) {
        bool joined = p + 1 < rd.rank(f) && S.count(rd.root_index(f, k, p));
        if (!joined) {
          out.push_back({f, k, start, p + 1});
          start = p + 1;
        }
      }
    }
  return out;
}

void require_split_single(const RootDatum& rd, const char* who) {
  if (rd.num_factors() != 1 || rd.degree(0) != 1)
    throw std::domain_error(std::string(who) + ": regular regime needs one split factor");
}

void require_minuscule(const IntVec& mu, const char* who) {
  for (Int x : mu)
    if (x != 0 && x != 1) throw std::domain_error(std::string(who) + ": non-minuscule weight");
}

// All (a_1..a_m) with 0 <= a_j <= dims[j] and sum k.
std::vector<std::vector<int>> compositions(const std::vector<int>& dims, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(dims.size(), 0);
  auto rec = [&](auto&& self, size_t j, int left) -> void {
    if (j == dims.size()) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (int v = 0; v <= std::min(dims[j], left); ++v) {
      a[j] = v;
      self(self, j + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

// Per-factor orbit sizes of the cocharacter under the block shift.
std::vector<int> field_of(const RootDatum& rd, const IntVec& mu_S) {
  std::vector<int> out;
  for (int f = 0; f < rd.num_factors(); ++f) {
    const int d = rd.degree(f);
    int fixed = 0;
    for (int t = 0; t < d; ++t) {
      bool same = true;
      for (int k = 0; k < d && same; ++k)
        for (int p = 0; p < rd.rank(f) && same; ++p)
          if (mu_S[rd.coord(f, (k + t) % d, p)] != mu_S[rd.coord(f, k, p)]) same = false;
      if (same) ++fixed;
    }
    out.push_back(d / fixed);
  }
  return out;
}

// Canonical form under the independent cyclic rotation of each factor's blocks.
void canonicalize_entries(std::vector<std::vector<GaloisTerm::BlockEntry>>& entries) {
  for (auto& fac : entries) {
    auto best = fac;
    auto rot = fac;
    for (size_t t = 1; t < fac.size(); ++t) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    fac = best;
  }
}

std::map<GaloisTerm, long long> galois_core(const RootDatum& rd, const LeviSet& S,
                                            const IntVec& mu_S,
                                            const std::vector<IntervalSupport>& supports,
                                            const Rat& base) {
  rd.check_vec(mu_S.size());
  require_minuscule(mu_S, "galois_apply");
  auto ivs = interval_list(rd, S);
  if (supports.size() != ivs.size())
    throw std::invalid_argument("galois_apply: one support list per absolute interval");

  struct Option {
    Rat twist;
    std::map<std::string, int> degs;
  };
  std::vector<std::vector<Option>> options;
  for (size_t t = 0; t < ivs.size(); ++t) {
    const AbsIv& iv = ivs[t];
    int k = 0, total = 0;
    for (int p = iv.lo; p < iv.hi; ++p) k += static_cast<int>(mu_S[rd.coord(iv.f, iv.k, p)]);
    std::vector<int> dims;
    for (const auto& [line, d] : supports[t]) {
      dims.push_back(d);
      total += d;
    }
    if (total != iv.hi - iv.lo)
      throw std::invalid_argument("galois_apply: support dimension mismatch");
    std::vector<Option> opts;
    for (const auto& a : compositions(dims, k)) {
      Option o;
      for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0) {
          o.twist += Rat(a[j]) * supports[t][j].first.twist;
          o.degs[supports[t][j].first.id] += a[j];
        }
      opts.push_back(std::move(o));
    }
    options.push_back(std::move(opts));
  }

  std::map<GaloisTerm, long long> out;
  std::vector<size_t> idx(ivs.size(), 0);
  std::vector<int> field = field_of(rd, mu_S);
  while (true) {
    GaloisTerm g;
    g.entries.resize(rd.num_factors());
    for (int f = 0; f < rd.num_factors(); ++f) g.entries[f].resize(rd.degree(f));
    g.tate = base;
    g.field = field;
    std::vector<std::vector<std::map<std::string, int>>> acc(rd.num_factors());
    for (int f = 0; f < rd.num_factors(); ++f) acc[f].resize(rd.degree(f));
    for (size_t t = 0; t < ivs.size(); ++t) {
      const Option& o = options[t][idx[t]];
      g.tate -= o.twist;
      for (const auto& [id, deg] : o.degs) acc[ivs[t].f][ivs[t].k][id] += deg;
    }
    for (int f = 0; f < rd.num_factors(); ++f)
      for (int k = 0; k < rd.degree(f); ++k)
        g.entries[f][k].assign(acc[f][k].begin(), acc[f][k].end());
    canonicalize_entries(g.entries);
    ++out[g];

    size_t t = 0;
    while (t < ivs.size() && ++idx[t] == options[t].size()) idx[t++] = 0;
    if (t == ivs.size()) break;
  }
  return out;
}

// Delta^{1/2} exponent of the parabolic above M_S on the given interval.
Rat interval_shift(const RootDatum& rd, const AbsIv& iv) {
  return Rat(rd.rank(iv.f) - (iv.hi - iv.lo) - 2 * iv.lo, 2);
}

// Twist-constancy check (the structural exponents always collapse to
// -<rho_G, mu>): <rho_G - rho_{M_S}, mu_S> must equal sum r_I * k_I.
void assert_twist_constancy(const RootDatum& rd, const CocharacterPair& p) {
  Rat lhs = rho_pairing(rd, rd.full_levi(), p.mu) - rho_pairing(rd, p.S, p.mu);
  Rat rhs = 0;
  for (const AbsIv& iv : interval_list(rd, p.S)) {
    Int k = 0;
    for (int q = iv.lo; q < iv.hi; ++q) k += p.mu[rd.coord(iv.f, iv.k, q)];
    rhs += interval_shift(rd, iv) * Rat(k);
  }
  if (lhs != rhs) throw std::logic_error("bracket: structural twist identity violated");
}

// All interleavings of an ordering from level S up to level L (regular
// regime): the relative order within each S-interval is preserved.
std::vector<std::vector<int>> shuffles(const RootDatum& rd, const LeviSet& S,
                                       const LeviSet& L, const std::vector<int>& o) {
  auto s_iv = rd.abs_intervals(S);
  auto l_iv = rd.abs_intervals(L);
  std::vector<int> label(o.size());
  for (size_t t = 0; t < s_iv.size(); ++t)
    for (int c = s_iv[t].first; c < s_iv[t].second; ++c) label[c] = static_cast<int>(t);

  std::vector<std::vector<std::vector<int>>> per_interval;  // label arrangements
  for (auto [lo, hi] : l_iv) {
    std::vector<int> lab(label.begin() + lo, label.begin() + hi);
    std::sort(lab.begin(), lab.end());
    std::vector<std::vector<int>> arr;
    do {
      arr.push_back(lab);
    } while (std::next_permutation(lab.begin(), lab.end()));
    per_interval.push_back(std::move(arr));
  }

  std::vector<std::vector<int>> out;
  std::vector<size_t> idx(l_iv.size(), 0);
  while (true) {
    std::vector<int> result(o.size());
    std::vector<int> cursor(s_iv.size());
    for (size_t t = 0; t < s_iv.size(); ++t) cursor[t] = s_iv[t].first;
    for (size_t b = 0; b < l_iv.size(); ++b) {
      const auto& lab = per_interval[b][idx[b]];
      for (size_t j = 0; j < lab.size(); ++j)
        result[l_iv[b].first + j] = o[cursor[lab[j]]++];
    }
    out.push_back(std::move(result));
    size_t b = 0;
    while (b < l_iv.size() && ++idx[b] == per_interval[b].size()) idx[b++] = 0;
    if (b == l_iv.size()) break;
  }
  return out;
}

void scale_orbit(EvalResult& res, int k) {
  if (k == 1) return;
  EvalResult scaled;
  for (const auto& [key, c] : res.terms) {
    GaloisTerm g = key.second;
    g.orbit_size *= k;
    scaled.add(key.first, g, c);
  }
  res = std::move(scaled);
}

// Stabilizer of the W-orbit of mu in Gamma_0.
std::vector<GammaElt> mu_stabilizer(const RootDatum& rd, const IntVec& mu) {
  IntVec mu_dom = dominant_rep(rd, rd.full_levi(), mu);
  std::vector<GammaElt> out;
  for (const GammaElt& g : rd.gamma_elements())
    if (dominant_rep(rd, rd.full_levi(), rd.gamma_apply(g, mu_dom)) == mu_dom)
      out.push_back(g);
  return out;
}

}  // namespace

FormalRep make_regular(const RootDatum& rd, std::vector<CuspidalLine> lines,
                       std::map<std::vector<int>, long long> borel) {
  require_split_single(rd, "make_regular");
  const size_t n = lines.size();
  if (n != static_cast<size_t>(rd.dimension()))
    throw std::invalid_argument("make_regular: one line per coordinate");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (lines[a] == lines[b])
        throw std::invalid_argument("make_regular: lines must be pairwise distinct");
  for (const auto& [o, c] : borel) {
    std::vector<int> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    for (size_t j = 0; j < sorted.size(); ++j)
      if (o.size() != n || sorted[j] != static_cast<int>(j))
        throw std::invalid_argument("make_regular: orderings must be permutations");
  }
  FormalRep rep;
  rep.regime = FormalRep::Regime::regular;
  rep.level = rd.full_levi();
  rep.lines = std::move(lines);
  for (const auto& [o, c] : borel)
    if (c != 0) rep.borel.emplace(o, c);
  return rep;
}

FormalRep make_cuspidal(const RootDatum& rd, const LeviSet& supp,
                        std::vector<CuspidalLine> lines) {
  if (!rd.is_gamma_stable(supp))
    throw std::invalid_argument("make_cuspidal: support Levi must be Gamma_0-stable");
  if (lines.size() != rd.rel_blocks(supp).size())
    throw std::invalid_argument("make_cuspidal: one line per support block");
  FormalRep rep;
  rep.regime = FormalRep::Regime::cuspidal;
  rep.level = rd.full_levi();
  rep.supp = supp;
  rep.cuspidal = std::move(lines);
  return rep;
}

InducedKey induced_key(const RootDatum& rd, const FormalRep& rep) {
  if (rep.regime != FormalRep::Regime::cuspidal)
    throw std::invalid_argument("induced_key: cuspidal regime only");
  InducedKey key(rd.num_factors());
  auto blocks = rd.rel_blocks(rep.supp);
  for (size_t t = 0; t < blocks.size(); ++t)
    key[blocks[t].factor].push_back({blocks[t].size(), rep.cuspidal[t]});
  for (auto& fac : key) std::sort(fac.begin(), fac.end());
  return key;
}

std::vector<CocharacterPair> branch_minuscule(const RootDatum& rd, const LeviSet& S,
                                              const IntVec& mu) {
  require_minuscule(mu, "branch_minuscule");
  std::vector<CocharacterPair> out;
  for (const IntVec& mu_S : dominant_conjugates(rd, rd.full_levi(), S, mu))
    out.push_back({S, mu_S});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CuspidalLine> ll_ss(const FormalRep& rep) {
  std::vector<CuspidalLine> out =
      rep.regime == FormalRep::Regime::regular ? rep.lines : rep.cuspidal;
  std::sort(out.begin(), out.end());
  return out;
}

RepCombo jacquet(const RootDatum& rd, const FormalRep& rep, const LeviSet& S) {
  if (!std::includes(rep.level.begin(), rep.level.end(), S.begin(), S.end()))
    throw std::invalid_argument("jacquet: target Levi not below the rep's level");
  if (rep.regime == FormalRep::Regime::regular) {
    FormalRep down = rep;
    down.level = S;
    return {{std::move(down), 1}};
  }
  if (rep.level != rd.full_levi())
    throw std::invalid_argument("jacquet: cuspidal regime starts at the full group");
  RepCombo out;
  auto blocks = rd.rel_blocks(rep.supp);
  for (const RelPerm& w : weyl_cosets(rd, rep.supp, S).Wb) {
    LeviSet img = weyl_apply_levi(rd, w, rep.supp);
    // Reassign each line to the image position of its block.
    auto img_blocks = rd.rel_blocks(img);
    std::vector<CuspidalLine> lines(img_blocks.size());
    for (size_t t = 0; t < blocks.size(); ++t) {
      int start = w[blocks[t].factor][blocks[t].start];
      for (int p = blocks[t].start; p < blocks[t].end; ++p)
        start = std::min(start, w[blocks[t].factor][p]);
      for (size_t u = 0; u < img_blocks.size(); ++u)
        if (img_blocks[u].factor == blocks[t].factor && img_blocks[u].start == start)
          lines[u] = rep.cuspidal[t];
    }
    FormalRep term;
    term.regime = FormalRep::Regime::cuspidal;
    term.level = S;
    term.supp = img;
    term.cuspidal = std::move(lines);
    out.push_back({std::move(term), 1});
  }
  return out;
}

RepCombo induct(const RootDatum& rd, const RepCombo& combo, const LeviSet& L) {
  RepCombo out;
  for (const RepTerm& t : combo) {
    if (!std::includes(L.begin(), L.end(), t.rep.level.begin(), t.rep.level.end()))
      throw std::invalid_argument("induct: target Levi not above the term's level");
    if (t.rep.regime == FormalRep::Regime::cuspidal) {
      FormalRep up = t.rep;
      up.level = L;
      out.push_back({std::move(up), t.coeff});
      continue;
    }
    FormalRep up;
    up.regime = FormalRep::Regime::regular;
    up.level = L;
    up.lines = t.rep.lines;
    for (const auto& [o, c] : t.rep.borel)
      for (const auto& o2 : shuffles(rd, t.rep.level, L, o)) up.borel[o2] += c;
    for (auto it = up.borel.begin(); it != up.borel.end();)
      it = it->second == 0 ? up.borel.erase(it) : std::next(it);
    out.push_back({std::move(up), t.coeff});
  }
  return out;
}

std::map<GaloisTerm, long long> galois_apply(const RootDatum& rd, const LeviSet& S,
                                             const IntVec& mu_S,
                                             const std::vector<IntervalSupport>& supports) {
  if (!is_dominant(rd, S, mu_S))
    throw std::invalid_argument("galois_apply: cocharacter must be M_S-dominant");
  return galois_core(rd, S, mu_S, supports, -rho_pairing(rd, S, mu_S));
}

EvalResult bracket(const RootDatum& rd, const CocharacterPair& p, const FormalRep& rep,
                   const IntVec& mu) {
  if (!validate_pair(rd, p)) throw std::invalid_argument("bracket: invalid pair");
  const LeviSet full = rd.full_levi();
  IntVec mu_dom = dominant_rep(rd, full, mu);
  if (!is_conjugate_in_levi(rd, full, p.mu, mu_dom))
    throw std::invalid_argument("bracket: cocharacter of the pair not conjugate to mu");
  assert_twist_constancy(rd, p);
  const Rat base = -rho_pairing(rd, full, mu_dom);
  auto ivs = interval_list(rd, p.S);

  EvalResult res;
  if (rep.regime == FormalRep::Regime::regular) {
    require_split_single(rd, "bracket");
    for (const auto& [o, c] : rep.borel) {
      std::vector<IntervalSupport> supports;
      for (const AbsIv& iv : ivs) {
        IntervalSupport sup;
        for (int q = iv.lo; q < iv.hi; ++q) sup.push_back({rep.lines[o[q]], 1});
        supports.push_back(std::move(sup));
      }
      auto gal = galois_core(rd, p.S, p.mu, supports, base);
      for (const auto& o2 : shuffles(rd, p.S, full, o))
        for (const auto& [g, n] : gal) res.add(RepKey{o2}, g, c * n);
    }
    return res;
  }

  RepKey key{induced_key(rd, rep)};
  for (const RepTerm& t : jacquet(rd, rep, p.S)) {
    auto blocks = rd.rel_blocks(t.rep.supp);
    std::vector<IntervalSupport> supports;
    for (const AbsIv& iv : ivs) {
      IntervalSupport sup;
      for (size_t u = 0; u < blocks.size(); ++u)
        if (blocks[u].factor == iv.f && iv.lo <= blocks[u].start && blocks[u].end <= iv.hi)
          sup.push_back({t.rep.cuspidal[u], blocks[u].size()});
      supports.push_back(std::move(sup));
    }
    for (const auto& [g, n] : galois_core(rd, p.S, p.mu, supports, base))
      res.add(key, g, t.coeff * n);
  }
  return res;
}

EvalResult evaluate_M(const RootDatum& rd, const IsocrystalClass& b, const IntVec& mu,
                      const FormalRep& rep) {
  SignedPairSum m = M_sum(rd, b, mu);
  std::vector<CocharacterPair> pairs;
  for (const auto& [p, c] : m.coeff) pairs.push_back(p);
  EvalResult res;
  for (const GaloisOrbit& orb : galois_orbit_partition(rd, pairs, mu_stabilizer(rd, mu))) {
    long long c = m.coeff.at(orb.members[0]);
    for (const CocharacterPair& q : orb.members)
      if (m.coeff.at(q) != c) throw std::logic_error("evaluate_M: orbit coefficients differ");
    EvalResult br = bracket(rd, orb.members[0], rep, mu);
    scale_orbit(br, static_cast<int>(orb.members.size()));
    res.add_all(br, c);
  }
  return res;
}

bool check_harris(const RootDatum& rd, const LeviSet& S, const IsocrystalClass& b,
                  const IntVec& mu, const FormalRep& rho) {
  if (rho.regime != FormalRep::Regime::cuspidal || rho.supp != S)
    throw std::invalid_argument("check_harris: need a cuspidal rep supported on M_S");
  for (int f = 0; f < rd.num_factors(); ++f)
    if (rd.degree(f) != 1)
      throw std::invalid_argument("check_harris: split factors only");
  if (b.ambient != rd.full_levi())
    throw std::invalid_argument("check_harris: b must be a class of the full group");
  if (!std::includes(b.levi.begin(), b.levi.end(), S.begin(), S.end()))
    throw std::invalid_argument("check_harris: need S contained in S_b");

  const Rat base = -rho_pairing(rd, rd.full_levi(), dominant_rep(rd, rd.full_levi(), mu));
  RepKey key{induced_key(rd, rho)};

  // Left side: the conjecture's input is the induction of rho to M_b, not to
  // G.  Treat M_b as a group in its own right (one split factor per block),
  // evaluate the basic M-operator there for each I-set instance, and
  // re-induce: the group side is I^G_S(rho) and each Tate exponent is moved
  // from the -<rho_{M_b}, mu_b> base to -<rho_G, mu>.
  std::vector<RelBlock> bblocks = rd.rel_blocks(b.levi);
  GroupSpec cspec;
  for (const RelBlock& blk : bblocks) cspec.factors.push_back({1, blk.size()});
  RootDatum child(cspec);
  LeviSet Sc;
  for (int r : S) {
    const SimpleRoot& root = rd.simple()[r];
    for (size_t u = 0; u < bblocks.size(); ++u)
      if (bblocks[u].factor == root.factor && bblocks[u].start <= root.pos &&
          root.pos + 1 < bblocks[u].end)
        Sc.insert(child.root_index(static_cast<int>(u), 0, root.pos - bblocks[u].start));
  }
  FormalRep rho_c = make_cuspidal(child, Sc, rho.cuspidal);

  EvalResult lhs;
  for (const CocharacterPair& q : I_set(rd, b.levi, b, mu)) {
    IntVec mu_c(child.dimension());
    for (size_t u = 0; u < bblocks.size(); ++u)
      for (int p = 0; p < bblocks[u].size(); ++p)
        mu_c[child.coord(static_cast<int>(u), 0, p)] =
            q.mu[rd.coord(bblocks[u].factor, 0, bblocks[u].start + p)];
    const IsocrystalClass* basic = nullptr;
    std::vector<IsocrystalClass> cbs = enumerate_B(child, mu_c);
    for (const IsocrystalClass& cand : cbs)
      if (cand.levi == child.full_levi()) basic = &cand;
    if (basic == nullptr)
      throw std::logic_error("check_harris: basic class of M_b not found");
    Rat shift = rho_pairing(rd, b.levi, q.mu) + base;
    for (const auto& [k2, c] : evaluate_M(child, *basic, mu_c, rho_c).terms) {
      const GaloisTerm& g = k2.second;
      GaloisTerm out;
      out.entries.assign(rd.num_factors(), {GaloisTerm::BlockEntry{}});
      for (size_t u = 0; u < bblocks.size(); ++u) {
        std::map<std::string, int> merged;
        for (const auto& [id, e] : out.entries[bblocks[u].factor][0]) merged[id] += e;
        for (const auto& [id, e] : g.entries[u][0]) merged[id] += e;
        out.entries[bblocks[u].factor][0].assign(merged.begin(), merged.end());
      }
      out.tate = g.tate + shift;
      out.field = std::vector<int>(rd.num_factors(), 1);
      lhs.add(key, out, c);
    }
  }
  auto blocks = rd.rel_blocks(S);
  EvalResult rhs;
  for (const GaloisOrbit& orb :
       galois_orbit_partition(rd, rel_set(rd, S, b, mu), mu_stabilizer(rd, mu))) {
    const CocharacterPair& q = orb.members[0];
    std::vector<IntervalSupport> supports;
    for (const AbsIv& iv : interval_list(rd, S)) {
      IntervalSupport sup;
      for (size_t u = 0; u < blocks.size(); ++u)
        if (blocks[u].factor == iv.f && blocks[u].start == iv.lo && blocks[u].end == iv.hi)
          sup.push_back({rho.cuspidal[u], blocks[u].size()});
      supports.push_back(std::move(sup));
    }
    auto gal = galois_core(rd, S, q.mu, supports, base);
    EvalResult part;
    for (const auto& [g, n] : gal) part.add(key, g, n);
    scale_orbit(part, static_cast<int>(orb.members.size()));
    rhs.add_all(part, 1);
  }
  return lhs == rhs;
}

const RegularFixture& gl4_fixture() {
  static const RegularFixture fx = [] {
    RegularFixture f;
    for (int k = 0; k < 4; ++k) f.lines.push_back({"r", Rat(k)});
    auto parse = [](std::initializer_list<const char*> words) {
      std::vector<std::vector<int>> out;
      for (const char* w : words) {
        std::vector<int> o;
        for (const char* c = w; *c; ++c) o.push_back(*c - '0');
        out.push_back(o);
      }
      return out;
    };
    f.classes = {
        {"111", parse({"3210"})},
        {"110", parse({"3201", "3021", "0321"})},
        {"101", parse({"3120", "1320", "1302", "3102", "1032"})},
        {"011", parse({"2310", "2130", "2103"})},
        {"100", parse({"3012", "0312", "0132"})},
        {"010", parse({"2013", "2031", "0213", "0231", "2301"})},
        {"001", parse({"1203", "1023", "1230"})},
        {"000", parse({"0123"})},
    };
    return f;
  }();
  return fx;
}

void validate_fixture(const RootDatum& rd, const RegularFixture& fx) {
  require_split_single(rd, "validate_fixture");
  const size_t n = fx.lines.size();
  if (n != static_cast<size_t>(rd.dimension()))
    throw std::invalid_argument("validate_fixture: line count mismatch");
  std::set<std::vector<int>> seen;
  size_t total = 0;
  for (const auto& [name, orderings] : fx.classes)
    for (const auto& o : orderings) {
      std::vector<int> sorted = o;
      std::sort(sorted.begin(), sorted.end());
      for (size_t j = 0; j < n; ++j)
        if (o.size() != n || sorted[j] != static_cast<int>(j))
          throw std::invalid_argument("validate_fixture: bad ordering");
      if (!seen.insert(o).second)
        throw std::invalid_argument("validate_fixture: overlapping class supports");
      ++total;
    }
  size_t fact = 1;
  for (size_t j = 2; j <= n; ++j) fact *= j;
  if (total != fact)
    throw std::invalid_argument("validate_fixture: supports do not cover all orderings");
}

FormalRep fixture_rep(const RootDatum& rd, const RegularFixture& fx, const std::string& name) {
  for (const auto& [cls, orderings] : fx.classes)
    if (cls == name) {
      std::map<std::vector<int>, long long> borel;
      for (const auto& o : orderings) borel[o] = 1;
      return make_regular(rd, fx.lines, std::move(borel));
    }
  throw std::invalid_argument("fixture_rep: unknown class " + name);
}

std::map<GaloisTerm, std::map<std::string, long long>> regroup(const EvalResult& res,
                                                               const RegularFixture& fx) {
  std::map<GaloisTerm, std::map<std::vector<int>, long long>> by_term;
  for (const auto& [key, c] : res.terms) {
    const auto* o = std::get_if<std::vector<int>>(&key.first);
    if (!o) throw std::invalid_argument("regroup: regular-regime results only");
    by_term[key.second][*o] = c;
  }
  std::map<GaloisTerm, std::map<std::string, long long>> out;
  for (const auto& [g, vec] : by_term) {
    for (const auto& [name, orderings] : fx.classes) {
      long long common = 0;
      bool first = true;
      for (const auto& o : orderings) {
        auto it = vec.find(o);
        long long c = it == vec.end() ? 0 : it->second;
        if (first) {
          common = c;
          first = false;
        } else if (c != common) {
          throw std::domain_error("regroup: vector not constant on class " + name);
        }
      }
      if (common != 0) out[g][name] = common;
    }
  }
  return out;
}

}  // namespace cochar
