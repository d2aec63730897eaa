// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact convex geometry over Q: affine hulls, canonical dual descriptions,
// membership, and sample points for the cells of a hyperplane arrangement.

#ifndef LATCAYLEY_EXACT_GEOMETRY_HPP_
#define LATCAYLEY_EXACT_GEOMETRY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "latcayley/arith.hpp"

namespace latcayley {

enum class ContainMode { Closed, RelativeInterior };

/// {x : normal·x = offset}. Canonical: (normal, offset) has gcd 1 and the first
/// nonzero entry of normal is positive. For hyperplanes through a lattice
/// point this makes the normal itself primitive.
struct Hyperplane {
  std::vector<Integer> normal;
  Integer offset;

  static Hyperplane make(std::vector<Integer> normal, Integer offset);
  /// normal·x - offset.
  Rational eval(const RationalPoint& x) const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// {x : normal·x <= offset}, with (normal, offset) divided by its gcd.
struct Inequality {
  std::vector<Integer> normal;
  Integer offset;

  static Inequality make(std::vector<Integer> normal, Integer offset);
  /// offset - normal·x, nonnegative on the feasible side.
  Rational slack(const RationalPoint& x) const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

bool operator<(const Inequality& a, const Inequality& b);

/// Simultaneous V- and H-description of a polytope in canonical form:
/// vertices sorted lexicographically, equalities in reduced echelon order,
/// facet normals vanishing on the echelon pivot coordinates of the affine
/// hull and sorted. Two descriptions of the same polytope compare equal.
struct DualDescription {
  std::size_t ambient_dim = 0;
  int dim = -1;
  std::vector<RationalPoint> vertices;
  std::vector<Inequality> facets;
  std::vector<Hyperplane> equalities;

  friend bool operator==(const DualDescription&, const DualDescription&) = default;
};

struct AffineHull {
  int dim = 0;
  std::vector<Hyperplane> equalities;
};

AffineHull affine_hull(std::span<const RationalPoint> points);
DualDescription convex_hull(std::span<const RationalPoint> points);
bool contains(const DualDescription& p, const RationalPoint& x, ContainMode mode);
int dimension(std::span<const RationalPoint> points);

/// Coordinates on an affine subspace: the non-pivot ("free") coordinates of
/// the reduced echelon form of its equations. Pivot coordinates are affine
/// functions of the free ones.
class AffineChart {
 public:
  /// Empty when the equations are inconsistent.
  static std::optional<AffineChart> from_equalities(
      std::size_t ambient_dim, std::span<const Hyperplane> equalities);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t local_dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_coords() const { return free_; }
  const std::vector<std::size_t>& pivot_coords() const { return pivots_; }
  /// Pivot coordinate i equals rhs(i) - sum_j coef(i, j) * local[j].
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  const Rational& coef(std::size_t i, std::size_t j) const { return coef_[i][j]; }

  RationalPoint to_local(const RationalPoint& x) const;
  RationalPoint lift(const RationalPoint& y) const;

  /// The restriction of {a·x <= b} (or = b) to the subspace, written as an
  /// integer constraint a'·y <= b' in local coordinates. a' may be zero.
  Inequality restrict(std::span<const Integer> a, const Integer& b) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<std::size_t> free_, pivots_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Rational>> coef_;
};

AffineChart chart_of(const DualDescription& p);

struct ArrangementCell {
  RationalPoint sample;  // barycenter of the closure's vertices
  int dim = 0;
};

/// One relative-interior sample per nonempty cell (of every dimension) of the
/// arrangement cut out by `hyperplanes` on the closed polytope `within`,
/// including the cells on its boundary. Sorted by sample.
std::vector<ArrangementCell> arrangement_cells(
    std::span<const Hyperplane> hyperplanes, const DualDescription& within);

std::vector<RationalPoint> arrangement_sample_points(
    std::span<const Hyperplane> hyperplanes, const DualDescription& within);

}  // namespace latcayley

#endif  // LATCAYLEY_EXACT_GEOMETRY_HPP_
