#pragma once

#include <cstdint>
#include <vector>

namespace sectionring {

/// Dense exact-field matrix as a row list; rows may be ragged-free (all the
/// same length n).
template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Reduces mat to row echelon form in place; returns the pivot column of
/// each surviving nonzero row, in order.
template <class K>
std::vector<std::size_t> row_echelon(Matrix<K>& mat) {
  std::vector<std::size_t> pivots;
  if (mat.empty()) return pivots;
  const std::size_t n = mat[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < mat.size(); ++col) {
    std::size_t sel = row;
    while (sel < mat.size() && mat[sel][col].is_zero()) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[row], mat[sel]);
    const K inv = K(1) / mat[row][col];
    for (std::size_t j = col; j < n; ++j) mat[row][j] = inv * mat[row][j];
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (i == row || mat[i][col].is_zero()) continue;
      const K factor = mat[i][col];
      for (std::size_t j = col; j < n; ++j) mat[i][j] = mat[i][j] - factor * mat[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> mat) {
  return row_echelon(mat).size();
}

/// Basis of {v : mat v = 0}, one vector per non-pivot column, built from the
/// reduced echelon form. Deterministic: the k-th basis vector has a 1 in the
/// k-th free column and zeros in the later ones.
template <class K>
Matrix<K> nullspace(Matrix<K> mat, std::size_t n_cols) {
  std::vector<std::size_t> pivots = row_echelon(mat);
  std::vector<bool> is_pivot(n_cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<K> basis;
  for (std::size_t free = 0; free < n_cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(n_cols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < free) v[pivots[r]] = -mat[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sectionring
