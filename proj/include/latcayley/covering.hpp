// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact deciders for covering a polytope (or its relative interior) by
// lattice translates of another polytope (or of its relative interior).

#ifndef LATCAYLEY_COVERING_HPP_
#define LATCAYLEY_COVERING_HPP_

#include <cstdint>
#include <optional>

#include "latcayley/lattice_polytope.hpp"

namespace latcayley {

struct CoverageQuery {
  LatticePolytope target;
  LatticePolytope translate_base;
  PointSet translations;
  ContainMode mode = ContainMode::Closed;
};

struct CoverageResult {
  bool covered = false;
  /// An uncovered point of the target region: the lexicographically smallest
  /// uncovered lattice point if there is one, else a sample of the lowest
  /// dimensional uncovered arrangement cell (lexicographically smallest).
  std::optional<RationalPoint> witness;
  std::uint64_t cells = 0;  // cells created while deciding
};

/// Cell budget for one decision: LATCAYLEY_CELL_BUDGET if set, else 10^6.
std::uint64_t default_cell_budget();

/// Decides by splitting the target region along translate facets, dropping
/// pieces as soon as one translate contains them.
CoverageResult covers(const CoverageQuery& q);
CoverageResult covers(const CoverageQuery& q, std::uint64_t budget);

/// Reference decider: samples every cell of the full arrangement and tests
/// each sample against every translate. Slow; meant for cross-checking.
CoverageResult covers_by_sampling(const CoverageQuery& q);

/// 2P = (P ∩ Z^N) + P.
CoverageResult is_2_convex_normal(const LatticePolytope& p);
/// relint(2P) = relint(P) + (P ∩ Z^N).
CoverageResult satisfies_condition_01(const LatticePolytope& p);

/// Whether x lies in t + base (or t + relint(base)) for some t.
bool covered_point(const CoverageQuery& q, const RationalPoint& x);

}  // namespace latcayley

#endif  // LATCAYLEY_COVERING_HPP_
