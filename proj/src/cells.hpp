// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Relatively open convex cells in chart coordinates, represented by the
// homogenized cone over their closure. Splitting a cell by a hyperplane is one
// double-description step.

#ifndef LATCAYLEY_SRC_CELLS_HPP_
#define LATCAYLEY_SRC_CELLS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cone.hpp"
#include "latcayley/exact_geometry.hpp"

namespace latcayley::detail {

/// c with c·(t, y) = t*offset - normal·y, nonnegative on the feasible side.
std::vector<Integer> homogenize(const Inequality& ineq);

/// Counts created cells against a budget; shared by one decision run.
class CellBudget {
 public:
  explicit CellBudget(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t n);
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class Cell {
 public:
  /// The open box prod (lo_i, hi_i) with integer bounds.
  static Cell box(std::span<const Integer> lo, std::span<const Integer> hi);

  int dim() const { return cone_.cone_dim() - 1; }
  std::size_t local_dim() const;
  Side classify(std::span<const Integer> c) const { return cone_.classify(c); }

  struct Pieces;
  Pieces split(std::span<const Integer> c) const;

  /// Closure vertices in local coordinates.
  std::vector<RationalPoint> vertices() const;
  RationalPoint sample() const;

 private:
  explicit Cell(Cone c) : cone_(std::move(c)) {}
  Cone cone_;
};

struct Cell::Pieces {
  Side side = Side::Cut;
  std::optional<Cell> negative, zero, positive;
};

/// Deterministic witness order: lower dimension first, then lexicographic.
bool witness_less(const ArrangementCell& a, const ArrangementCell& b);

}  // namespace latcayley::detail

#endif  // LATCAYLEY_SRC_CELLS_HPP_
