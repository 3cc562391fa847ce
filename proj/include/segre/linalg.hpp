#pragma once

#include "segre/numeric.hpp"

#include <optional>
#include <vector>

namespace segre {

using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int int_det(IMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline Rat rat_det(QMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

inline int rat_rank(QMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<QMat> rat_inverse(QMat m) {
  const std::size_t n = m.size();
  QMat inv(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    std::swap(inv[k], inv[p]);
    Rat piv = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

/// Normal of the hyperplane through n integer points (generalized cross
/// product of the difference vectors). Zero vector when the points are
/// affinely dependent. For n == 1 the "hyperplane" is the point itself.
inline IVec hyperplane_normal(const std::vector<IVec>& pts) {
  const std::size_t n = pts[0].size();
  IVec normal(n, 0);
  if (n == 1) {
    normal[0] = 1;
    return normal;
  }
  IMat diffs(n - 1, IVec(n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) diffs[i][j] = pts[i + 1][j] - pts[0][j];
  Int sign = 1;
  for (std::size_t skip = 0; skip < n; ++skip) {
    IMat minor(n - 1, IVec(n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        minor[i][cc++] = diffs[i][j];
      }
    }
    normal[skip] = sign * int_det(minor);
    sign = -sign;
  }
  return normal;
}

}  // namespace segre
