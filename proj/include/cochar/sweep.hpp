#pragma once

#include "cochar/root_datum.hpp"

namespace cochar {

struct SweepCase {
  GroupSpec group;
  std::vector<IntVec> mus;  // dominant cocharacters to exercise
};

// The exhaustive verification class: split GL_n (minuscule for n <= 6, {0,1,2}
// entries for n <= 4), Res_d GL_n with d <= 3 and n <= 3 (blockwise
// minuscule), and split two-factor products of total rank <= 6 (minuscule).
// Cases with more than max_rank torus coordinates are dropped.
std::vector<SweepCase> sweep_cases(int max_rank);

// All Gamma_0-stable Levi sets of the group (unions of relative-root orbits).
std::vector<LeviSet> stable_levis(const RootDatum& rd);

}  // namespace cochar
