#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dkfield/matrix.hpp"

namespace dkf {

/// Dense complex matrix in row-major vector-of-rows form, small sizes only.
using CMatrix = std::vector<std::vector<cplx>>;

/// Null-space basis by Gauss-Jordan elimination with partial pivoting.
/// Rows shorter than the widest row are zero-padded. `rel_tol` is the pivot
/// threshold relative to the largest entry.
inline std::vector<std::vector<cplx>> nullspace_basis(CMatrix m, double rel_tol = 1e-10) {
  std::size_t rows = m.size();
  std::size_t cols = 0;
  for (const auto& r : m) cols = std::max(cols, r.size());
  for (auto& r : m) r.resize(cols, cplx(0.0));
  if (cols == 0) return {};

  double scale = 0.0;
  for (const auto& r : m)
    for (const auto& v : r) scale = std::max(scale, std::abs(v));
  const double tol = scale > 0.0 ? rel_tol * scale : rel_tol;

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) <= tol) continue;
    std::swap(m[piv], m[rank]);
    const cplx inv = 1.0 / m[rank][col];
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const cplx f = m[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<cplx>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<cplx> v(cols, cplx(0.0));
    v[free_col] = 1.0;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dkf
