#include "cochar/sweep.hpp"

#include <algorithm>

namespace cochar {

namespace {

// Dominant vectors of length n with entries drawn from values (descending).
std::vector<IntVec> dominant_vectors(int n, const IntVec& values) {
  std::vector<IntVec> out;
  IntVec v(n);
  auto rec = [&](auto&& self, int pos, size_t max_idx) -> void {
    if (pos == n) {
      out.push_back(v);
      return;
    }
    for (size_t j = max_idx; j < values.size(); ++j) {
      v[pos] = values[j];
      self(self, pos + 1, j);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<IntVec> minuscule(int n) { return dominant_vectors(n, {1, 0}); }

// Blockwise products of dominant profiles for a multi-block group.
std::vector<IntVec> block_products(const RootDatum& rd,
                                   const std::vector<std::vector<IntVec>>& per_block) {
  std::vector<IntVec> out;
  std::vector<size_t> idx(per_block.size(), 0);
  while (true) {
    IntVec v;
    for (size_t t = 0; t < per_block.size(); ++t) {
      const IntVec& blk = per_block[t][idx[t]];
      v.insert(v.end(), blk.begin(), blk.end());
    }
    rd.check_vec(v.size());
    out.push_back(std::move(v));
    size_t t = 0;
    while (t < per_block.size() && ++idx[t] == per_block[t].size()) idx[t++] = 0;
    if (t == per_block.size()) break;
  }
  return out;
}

}  // namespace

std::vector<SweepCase> sweep_cases(int max_rank) {
  std::vector<SweepCase> out;
  for (int n = 1; n <= 6 && n <= max_rank; ++n) {
    GroupSpec g{{{1, n}}};
    SweepCase c{g, minuscule(n)};
    if (n <= 4)
      for (const IntVec& v : dominant_vectors(n, {2, 1, 0}))
        if (!std::binary_search(c.mus.begin(), c.mus.end(), v,
                                [](const IntVec& a, const IntVec& b) { return a > b; }))
          c.mus.push_back(v);
    out.push_back(std::move(c));
  }
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n) {
      if (d * n > max_rank) continue;
      GroupSpec g{{{d, n}}};
      RootDatum rd(g);
      std::vector<std::vector<IntVec>> per_block(d, minuscule(n));
      out.push_back({g, block_products(rd, per_block)});
    }
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      if (a + b > 6 || a + b > max_rank) continue;
      GroupSpec g{{{1, a}, {1, b}}};
      RootDatum rd(g);
      out.push_back({g, block_products(rd, {minuscule(a), minuscule(b)})});
    }
  return out;
}

std::vector<LeviSet> stable_levis(const RootDatum& rd) {
  std::vector<RelRoot> rel = rd.relative_simple();
  std::vector<LeviSet> out;
  for (size_t mask = 0; mask < (size_t{1} << rel.size()); ++mask) {
    LeviSet S;
    for (size_t t = 0; t < rel.size(); ++t)
      if (mask >> t & 1)
        for (int r : rd.rel_orbit(rel[t])) S.insert(r);
    out.push_back(std::move(S));
  }
  return out;
}

}  // namespace cochar
