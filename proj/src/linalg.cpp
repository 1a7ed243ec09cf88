#include "arrfree/linalg.hpp"

namespace arrfree {

namespace {

// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (int c = col; c < cols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(Matrix m, int cols) {
  std::vector<int> pivots = rref(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols);
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(Matrix m, int cols) { return static_cast<int>(rref(m, cols).size()); }

}  // namespace arrfree
