// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LATCAYLEY_SRC_LINALG_HPP_
#define LATCAYLEY_SRC_LINALG_HPP_

#include <vector>

#include "latcayley/arith.hpp"

namespace latcayley::detail {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Reduces `m` in place to reduced row echelon form over the first `ncols`
/// columns (remaining columns are carried along, e.g. a right-hand side).
/// Zero rows are removed. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols);

std::size_t rank(RatMatrix m);

/// Inverse of a square invertible matrix; throws on singular input.
RatMatrix inverse(const RatMatrix& m);

}  // namespace latcayley::detail

#endif  // LATCAYLEY_SRC_LINALG_HPP_
