#include "singulact/linalg.hpp"

#include <utility>

#include "singulact/errors.hpp"

namespace singulact::linalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rat inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rat factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

std::vector<Vector> nullspace(Matrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Rat(0));
    x[free] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_unique(const Matrix& m, const Vector& b) {
  if (m.size() != b.size()) throw DimensionMismatch(m.size(), b.size());
  if (m.empty()) return std::nullopt;
  const std::size_t cols = m.front().size();
  Matrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (pivots.size() != cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[r] = aug[r][cols];
  return x;
}

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat factor = m[r][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

Rat dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace singulact::linalg
