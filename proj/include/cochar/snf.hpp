#pragma once

#include <vector>

#include "cochar/rational.hpp"

namespace cochar {

using IMat = std::vector<std::vector<BigInt>>;

struct SnfResult {
  IMat U, Uinv;               // U*A*V = D, U unimodular, Uinv = U^{-1}
  std::vector<BigInt> diag;   // d_0..d_{r-1}, all nonzero; r = rank
  int rank = 0;
};

// Diagonalizes A by unimodular row/column operations (column transform V is
// not tracked). diag holds the nonzero diagonal entries; the quotient
// Z^rows / colspan(A) is Z^{rows-rank} + sum Z/|d_i|.
SnfResult smith_diagonalize(IMat A);

BigInt int_det(IMat A);  // Bareiss fraction-free determinant (square matrix)

}  // namespace cochar
