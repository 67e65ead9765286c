#pragma once

// Small dense exact linear algebra over Q.

#include <adamsops/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>

namespace adamsops {

/// Solves A x = b for A with full column rank. Returns nullopt when the
/// system is inconsistent (b outside the column span).
inline std::optional<RationalVector> solve_exact(RationalMatrix a, RationalVector b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("solve_exact: dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw DomainError("solve_exact: columns are linearly dependent");
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  RationalVector x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
  return x;
}

inline std::size_t rank(RationalMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline BigRational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) throw DomainError("determinant: matrix is not square");
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace adamsops
