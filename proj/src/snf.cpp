#include "cochar/snf.hpp"

#include <stdexcept>

namespace cochar {

static BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

SnfResult smith_diagonalize(IMat A) {
  int n = static_cast<int>(A.size());
  int m = n ? static_cast<int>(A[0].size()) : 0;
  SnfResult res;
  res.U.assign(n, std::vector<BigInt>(n, 0));
  res.Uinv.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) res.U[i][i] = res.Uinv[i][i] = 1;

  auto swap_rows = [&](int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(res.U[a], res.U[b]);
    for (int i = 0; i < n; ++i) std::swap(res.Uinv[i][a], res.Uinv[i][b]);
  };
  auto add_row = [&](int a, int b, const BigInt& c) {  // row_a += c * row_b
    for (int j = 0; j < m; ++j) A[a][j] += c * A[b][j];
    for (int j = 0; j < n; ++j) res.U[a][j] += c * res.U[b][j];
    for (int i = 0; i < n; ++i) res.Uinv[i][b] -= c * res.Uinv[i][a];
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < n; ++i) std::swap(A[i][a], A[i][b]);
  };
  auto add_col = [&](int a, int b, const BigInt& c) {  // col_a += c * col_b
    for (int i = 0; i < n; ++i) A[i][a] += c * A[i][b];
  };

  int t = 0;
  while (t < n && t < m) {
    // find a nonzero pivot in the remaining submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < n && pi < 0; ++i)
      for (int j = t; j < m; ++j)
        if (A[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i)
        if (A[i][t] != 0) {
          BigInt q = A[i][t] / A[t][t];
          add_row(i, t, -q);
          if (A[i][t] != 0) {
            swap_rows(t, i);
            clean = false;
          }
        }
      for (int j = t + 1; j < m; ++j)
        if (A[t][j] != 0) {
          BigInt q = A[t][j] / A[t][t];
          add_col(j, t, -q);
          if (A[t][j] != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
    }
    res.diag.push_back(babs(A[t][t]));
    ++t;
  }
  res.rank = static_cast<int>(res.diag.size());
  return res;
}

BigInt int_det(IMat A) {
  int n = static_cast<int>(A.size());
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (A[i][k] != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      std::swap(A[k], A[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        if (prev != 1 && prev != 0) v /= prev;
        A[i][j] = v;
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

}  // namespace cochar
