// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Decision procedures for IDP, tuple-IDP, level index, levelness, the
// Gorenstein property and the edge-length criterion.

#ifndef LATCAYLEY_PROPERTIES_HPP_
#define LATCAYLEY_PROPERTIES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcayley/covering.hpp"
#include "latcayley/lattice_polytope.hpp"

namespace latcayley {

enum class Verdict { Holds, Fails, VerifiedUpToHorizon };
std::string to_string(Verdict v);

struct Witness {
  std::optional<long> degree;
  RationalPoint point;
  std::vector<std::size_t> subset;  // 1-based polytope indices, tuple checks only
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness;
  std::optional<std::pair<long, long>> degrees_checked;  // inclusive
  std::optional<long> horizon_used;
  std::optional<long> index;  // level or Gorenstein index
  std::vector<std::string> notes;

  bool ok() const { return verdict != Verdict::Fails; }
};

struct LevelData {
  long index_r = 1;
  PointSet interior_generators;  // lattice points of relint(r P)
};

/// Checks nP ∩ Z = (n-1)P ∩ Z + P ∩ Z for n = 2..D, with D = max_degree or
/// max(2, dim P - 1). The default D is enough for a full certificate.
PropertyReport is_idp(const LatticePolytope& p, std::optional<long> max_degree = {});

/// Checks (sum_{i in I} P_i) ∩ Z = sum_{i in I} (P_i ∩ Z) for every subset I
/// with at least two members, subsets taken in increasing bitmask order.
PropertyReport is_tuple_idp(std::span<const LatticePolytope> ps);

LevelData level_index(const LatticePolytope& p);

/// Checks relint(nP) ∩ Z = relint(rP) ∩ Z + (n-r)P ∩ Z for n = r..H with
/// H = horizon or r + dim P + 2. Never returns Holds.
PropertyReport level_status(const LatticePolytope& p, std::optional<long> horizon = {});

/// Level to the horizon with a single interior point of rP.
PropertyReport is_gorenstein(const LatticePolytope& p, std::optional<long> horizon = {});

/// Every edge has lattice length >= 2d(d+1). Throws for dim 0.
bool edge_length_criterion(const LatticePolytope& p);

/// Report view of a covering decision ("2cn" or "cond01").
PropertyReport coverage_report(const std::string& property, const CoverageResult& r);

}  // namespace latcayley

#endif  // LATCAYLEY_PROPERTIES_HPP_
