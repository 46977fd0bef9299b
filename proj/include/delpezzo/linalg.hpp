#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace delpezzo {

/// Dense row-major matrix over an exact field (Rat or SqrtCombo). The field
/// type must provide is_zero(x), inverse(x), +, -, * found by ADL.
template <class Field>
using Matrix = std::vector<std::vector<Field>>;

namespace detail {

/// In-place reduction to row echelon form. For each column the pivot is the
/// first row (from the current one down) with a nonzero entry. Returns the
/// pivot columns in order.
template <class Field>
std::vector<std::size_t> row_echelon(Matrix<Field>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && is_zero(m[pivot][col])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Field inv = inverse(m[row][col]);
    for (std::size_t c = col; c < m[row].size(); ++c) m[row][c] = m[row][c] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const Field factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        m[r][c] = m[r][c] - factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank by Gauss-Jordan elimination.
template <class Field>
std::size_t matrix_rank(Matrix<Field> m) {
  if (m.empty()) return 0;
  return detail::row_echelon(m, m.front().size()).size();
}

/// One solution of A·x = b, or nullopt when inconsistent. Free variables
/// are set to zero, so the representative is deterministic but not unique.
template <class Field>
std::optional<std::vector<Field>> solve_linear(const Matrix<Field>& a, const std::vector<Field>& b) {
  if (a.empty()) return std::vector<Field>{};
  const std::size_t cols = a.front().size();
  Matrix<Field> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = detail::row_echelon(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Field> x(cols, Field(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

template <class Field>
Matrix<Field> multiply(const Matrix<Field>& a, const Matrix<Field>& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  Matrix<Field> out(n, std::vector<Field>(m, Field(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  }
  return out;
}

}  // namespace delpezzo
