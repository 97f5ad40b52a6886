#include "idkit/linsolve.hpp"

namespace idkit {

LinearSolveResult solve_linear(const Mat& A, const Vec& b) {
  if (b.dim() != A.nrows()) throw DimensionMismatch();
  const std::size_t m = A.nrows();
  const std::size_t n = A.ncols;

  // Augmented tableau [A | b], reduced to RREF.
  std::vector<Vec> T(m, Vec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A.rows[i][j];
    T[i][n] = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && T[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(T[piv], T[row]);
    const Rat inv = Rat(1) / T[row][col];
    for (std::size_t j = col; j <= n; ++j) T[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || T[i][col] == 0) continue;
      const Rat f = T[i][col];
      for (std::size_t j = col; j <= n; ++j) T[i][j] -= f * T[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolveResult res;
  res.rank = pivot_col.size();

  bool consistent = true;
  for (std::size_t i = res.rank; i < m; ++i)
    if (T[i][n] != 0) {
      consistent = false;
      break;
    }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  if (consistent) {
    Vec x(n);
    for (std::size_t r = 0; r < res.rank; ++r) x[pivot_col[r]] = T[r][n];
    res.solution = std::move(x);
  }

  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < res.rank; ++r) v[pivot_col[r]] = -T[r][f];
    res.null_basis.push_back(std::move(v));
  }
  return res;
}

std::size_t mat_rank(const Mat& A) { return solve_linear(A, Vec(A.nrows())).rank; }

std::vector<Vec> null_space(const Mat& A) {
  return solve_linear(A, Vec(A.nrows())).null_basis;
}

}  // namespace idkit
