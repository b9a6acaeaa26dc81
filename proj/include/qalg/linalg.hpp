#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qalg/laurent.hpp"

namespace qalg {

template <Field F>
using Matrix = std::vector<std::vector<F>>;

/// Basis of the right kernel {v : A v = 0}, by Gauss-Jordan elimination.
template <Field F>
std::vector<std::vector<F>> nullspace(Matrix<F> a, std::size_t columns) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const F inv = a[row][col].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const F factor = a[r][col];
      for (std::size_t c = col; c < columns; ++c) a[r][c] = a[r][c] - factor * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(columns, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qalg
