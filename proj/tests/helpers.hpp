#pragma once

#include <initializer_list>
#include <vector>

#include "cochar/root_datum.hpp"

namespace cochar::testutil {

inline RootDatum gl(int n) { return RootDatum{GroupSpec{{{1, n}}}}; }
inline RootDatum res(int d, int n) { return RootDatum{GroupSpec{{{d, n}}}}; }
inline RootDatum product(std::initializer_list<GroupFactor> fs) {
  return RootDatum{GroupSpec{std::vector<GroupFactor>(fs)}};
}

inline LeviSet levi(std::initializer_list<int> roots) { return LeviSet(roots); }

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }
inline IntVec iv(std::initializer_list<Int> xs) { return IntVec(xs); }

}  // namespace cochar::testutil
