// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

namespace latcayley::detail {

std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  // Rows past `row` are zero on the first ncols columns; keep them only if
  // they carry a nonzero extra entry (an inconsistency marker).
  RatMatrix kept(m.begin(), m.begin() + row);
  for (std::size_t r = row; r < m.size(); ++r) {
    bool nonzero = false;
    for (std::size_t c = ncols; c < m[r].size(); ++c)
      if (sgn(m[r][c]) != 0) nonzero = true;
    if (nonzero) kept.push_back(m[r]);
  }
  m = std::move(kept);
  return pivots;
}

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  const std::size_t n = m[0].size();
  return rref(m, n).size();
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) throw Error("singular matrix");
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace latcayley::detail
