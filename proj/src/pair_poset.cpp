#include "cochar/pair_poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cochar {

bool validate_pair(const RootDatum& rd, const CocharacterPair& p) {
  rd.check_vec(p.mu.size());
  for (int r : p.S)
    if (r < 0 || r >= rd.num_simple()) return false;
  if (!rd.is_gamma_stable(p.S)) return false;
  return is_dominant(rd, p.S, p.mu);
}

RatVec theta(const RootDatum& rd, const CocharacterPair& p) {
  return theta(rd, p.S, p.mu);
}

std::string pair_label(const RootDatum& rd, const CocharacterPair& p) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& blk : rd.rel_blocks(p.S)) {
    if (!first) os << 'x';
    first = false;
    if (rd.degree(blk.factor) > 1) os << "Res_" << rd.degree(blk.factor) << "(";
    os << "GL_" << blk.size();
    if (rd.degree(blk.factor) > 1) os << ")";
  }
  os << ", ";
  for (auto [lo, hi] : rd.abs_intervals(p.S)) {
    os << '(';
    for (int c = lo; c < hi; ++c) {
      if (c > lo) os << ',';
      os << p.mu[c];
    }
    os << ')';
  }
  os << ')';
  return os.str();
}

// Distinct rearrangements of mu within the absolute intervals of S1 that are
// M_{S2}-dominant, for S2 obtained from S1 by removing one relative orbit.
static std::vector<IntVec> levi_rearrangements(const RootDatum& rd, const LeviSet& S1,
                                               const LeviSet& S2, const IntVec& mu) {
  // coordinate c -> simple root index e_c - e_{c+1}, or -1
  std::vector<int> coord2root(rd.dimension(), -1);
  for (int r = 0; r < rd.num_simple(); ++r) coord2root[rd.simple()[r].i] = r;

  auto intervals = rd.abs_intervals(S1);
  std::vector<std::vector<IntVec>> choices;  // per interval, admissible slices
  for (auto [lo, hi] : intervals) {
    IntVec slice(mu.begin() + lo, mu.begin() + hi);
    std::sort(slice.begin(), slice.end());
    std::vector<IntVec> good;
    do {
      bool dom = true;
      for (int c = lo; c + 1 < hi && dom; ++c)
        if (S2.count(coord2root[c]) && slice[c - lo] < slice[c + 1 - lo]) dom = false;
      if (dom) good.push_back(slice);
    } while (std::next_permutation(slice.begin(), slice.end()));
    choices.push_back(std::move(good));
  }
  std::vector<IntVec> out;
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    IntVec cand = mu;
    for (size_t k = 0; k < intervals.size(); ++k) {
      auto [lo, hi] = intervals[k];
      std::copy(choices[k][idx[k]].begin(), choices[k][idx[k]].end(), cand.begin() + lo);
    }
    out.push_back(std::move(cand));
    size_t k = 0;
    for (; k < idx.size(); ++k) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
    }
    if (k == idx.size()) break;
  }
  return out;
}

std::vector<CocharacterPair> lower_covers(const RootDatum& rd, const CocharacterPair& p) {
  if (!validate_pair(rd, p)) throw std::invalid_argument("invalid cocharacter pair");
  std::vector<CocharacterPair> out;
  RatVec th1 = theta(rd, p);
  std::map<RelRoot, bool> seen_orbit;
  for (int r : p.S) {
    RelRoot rr = rd.rel_root_of(r);
    if (seen_orbit.count(rr)) continue;
    seen_orbit[rr] = true;
    LeviSet S2 = p.S;
    for (int o : rd.rel_orbit(rr)) S2.erase(o);
    for (const auto& cand : levi_rearrangements(rd, p.S, S2, p.mu)) {
      RatVec th2 = theta(rd, S2, cand);
      if (th2 == th1) continue;
      if (!preceq_rel(rd, th1, th2)) continue;
      CocharacterPair q{S2, cand};
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const RootDatum& rd, const CocharacterPair& lower, const CocharacterPair& upper) {
  if (!validate_pair(rd, lower) || !validate_pair(rd, upper)) return false;
  if (!std::includes(upper.S.begin(), upper.S.end(), lower.S.begin(), lower.S.end()))
    return false;
  std::map<RelRoot, bool> diff;
  for (int r : upper.S)
    if (!lower.S.count(r)) diff[rd.rel_root_of(r)] = true;
  if (diff.size() != 1) return false;
  if (!is_conjugate_in_levi(rd, upper.S, lower.mu, upper.mu)) return false;
  RatVec tl = theta(rd, lower), tu = theta(rd, upper);
  return tl != tu && preceq_rel(rd, tu, tl);
}

PairPoset down_set(const RootDatum& rd, const CocharacterPair& top) {
  std::map<CocharacterPair, int> index;
  std::vector<CocharacterPair> nodes;
  std::vector<std::pair<int, int>> edges;
  std::deque<int> queue;
  index[top] = 0;
  nodes.push_back(top);
  queue.push_back(0);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& q : lower_covers(rd, nodes[u])) {
      auto it = index.find(q);
      int v;
      if (it == index.end()) {
        v = static_cast<int>(nodes.size());
        index[q] = v;
        nodes.push_back(q);
        queue.push_back(v);
      } else {
        v = it->second;
      }
      edges.emplace_back(v, u);
    }
  }
  // canonical order
  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nodes[a] < nodes[b]; });
  std::vector<int> rank(nodes.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  PairPoset poset;
  poset.nodes.resize(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) poset.nodes[rank[i]] = nodes[i];
  for (auto [a, b] : edges) poset.edges.emplace_back(rank[a], rank[b]);
  std::sort(poset.edges.begin(), poset.edges.end());
  poset.edges.erase(std::unique(poset.edges.begin(), poset.edges.end()), poset.edges.end());
  return poset;
}

bool leq(const RootDatum& rd, const CocharacterPair& p2, const CocharacterPair& p1) {
  if (p2 == p1) return validate_pair(rd, p1);
  auto poset = down_set(rd, p1);
  return std::binary_search(poset.nodes.begin(), poset.nodes.end(), p2);
}

bool is_strictly_decreasing(const RootDatum& rd, const CocharacterPair& p,
                            const LeviSet& relative_to) {
  if (!std::includes(relative_to.begin(), relative_to.end(), p.S.begin(), p.S.end()))
    throw std::invalid_argument("is_strictly_decreasing: S must be contained in relative_to");
  RatVec th = theta(rd, p);
  for (int r : relative_to)
    if (!p.S.count(r) && root_pairing(rd, r, th) <= 0) return false;
  return true;
}

bool is_strictly_decreasing(const RootDatum& rd, const CocharacterPair& p) {
  return is_strictly_decreasing(rd, p, rd.full_levi());
}

CocharacterPair extension(const RootDatum& rd, const CocharacterPair& p, const LeviSet& S2) {
  if (!rd.is_gamma_stable(S2)) throw std::invalid_argument("extension: unstable Levi set");
  if (!std::includes(S2.begin(), S2.end(), p.S.begin(), p.S.end()))
    throw std::invalid_argument("extension: target Levi must contain S_p");
  if (!is_strictly_decreasing(rd, p, S2))
    throw std::invalid_argument("extension: pair not strictly decreasing relative to target");
  return {S2, dominant_rep(rd, S2, p.mu)};
}

PairPoset cube(const RootDatum& rd, const CocharacterPair& p, const LeviSet& amb) {
  // Climb to the first strictly decreasing pair above p by repeatedly adding
  // every relative simple root pairing > 0 with theta, then take the full
  // 2^n extension cube of that pair.
  CocharacterPair q = p;
  while (!is_strictly_decreasing(rd, q, amb)) {
    RatVec th = theta(rd, q);
    LeviSet S2 = q.S;
    for (int r : amb)
      if (!q.S.count(r) && root_pairing(rd, r, th) > 0)
        for (int o : rd.rel_orbit(r)) S2.insert(o);
    if (S2 == q.S) break;  // no strictly positive direction left
    q = extension(rd, q, S2);
  }
  PairPoset poset;
  if (!is_strictly_decreasing(rd, q, amb)) {
    poset.nodes.push_back(q);
    return poset;
  }
  std::vector<RelRoot> outside;
  std::map<RelRoot, bool> seen;
  for (int r : amb)
    if (!q.S.count(r)) {
      RelRoot rr = rd.rel_root_of(r);
      if (!seen.count(rr)) {
        seen[rr] = true;
        outside.push_back(rr);
      }
    }
  size_t n = outside.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    LeviSet S2 = q.S;
    for (size_t k = 0; k < n; ++k)
      if (mask & (size_t{1} << k))
        for (int o : rd.rel_orbit(outside[k])) S2.insert(o);
    poset.nodes.push_back(extension(rd, q, S2));
  }
  std::sort(poset.nodes.begin(), poset.nodes.end());
  poset.nodes.erase(std::unique(poset.nodes.begin(), poset.nodes.end()), poset.nodes.end());
  for (size_t a = 0; a < poset.nodes.size(); ++a)
    for (size_t b = 0; b < poset.nodes.size(); ++b)
      if (a != b && covers(rd, poset.nodes[a], poset.nodes[b]))
        poset.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  std::sort(poset.edges.begin(), poset.edges.end());
  return poset;
}

PairPoset cube(const RootDatum& rd, const CocharacterPair& p) {
  return cube(rd, p, rd.full_levi());
}

std::vector<CocharacterPair> sd_set(const RootDatum& rd, const IntVec& mu, const LeviSet& amb) {
  CocharacterPair top{amb, dominant_rep(rd, amb, mu)};
  auto poset = down_set(rd, top);
  std::vector<CocharacterPair> out;
  for (const auto& p : poset.nodes)
    if (is_strictly_decreasing(rd, p, amb)) out.push_back(p);
  return out;
}

std::vector<CocharacterPair> sd_set(const RootDatum& rd, const IntVec& mu) {
  return sd_set(rd, mu, rd.full_levi());
}

std::string hasse_dot(const RootDatum& rd, const PairPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << pair_label(rd, poset.nodes[i]) << "\"];\n";
  for (auto [lo, hi] : poset.edges) os << "  n" << hi << " -> n" << lo << ";\n";
  os << "}\n";
  return os.str();
}

CocharacterPair gamma_apply(const RootDatum& rd, const GammaElt& g, const CocharacterPair& p) {
  if (!rd.is_gamma_stable(p.S))
    throw std::invalid_argument("gamma_apply: Levi set not Gamma_0-stable");
  return {p.S, rd.gamma_apply(g, p.mu)};
}

LeviSet weyl_apply_levi(const RootDatum& rd, const RelPerm& w, const LeviSet& S) {
  LeviSet out;
  for (const auto& blk : rd.rel_blocks(S)) {
    if (blk.size() == 1) continue;
    std::vector<int> img;
    for (int p = blk.start; p < blk.end; ++p) img.push_back(w[blk.factor][p]);
    std::sort(img.begin(), img.end());
    for (size_t k = 0; k + 1 < img.size(); ++k)
      if (img[k + 1] != img[k] + 1)
        throw std::invalid_argument("weyl_apply_levi: image Levi is not standard");
    for (size_t k = 0; k + 1 < img.size(); ++k)
      for (int b = 0; b < rd.degree(blk.factor); ++b)
        out.insert(rd.root_index(blk.factor, b, img[k]));
  }
  return out;
}

CocharacterPair weyl_apply(const RootDatum& rd, const RelPerm& w, const CocharacterPair& p) {
  return {weyl_apply_levi(rd, w, p.S), rd.rel_apply(w, p.mu)};
}

}  // namespace cochar
