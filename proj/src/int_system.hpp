// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Integer kernels behind lattice-point enumeration and membership. Each has a
// 128-bit path, taken only when every coefficient is small enough that no sum
// of products can overflow, and a GMP path otherwise.

#ifndef LATCAYLEY_SRC_INT_SYSTEM_HPP_
#define LATCAYLEY_SRC_INT_SYSTEM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "latcayley/exact_geometry.hpp"
#include "latcayley/lattice_polytope.hpp"

namespace latcayley::detail {

/// Lattice points x with x in {equalities} and every facet satisfied
/// (strictly, for RelativeInterior), enumerated over the free coordinates of
/// the equations inside the box [lo, hi].
PointSet enumerate_lattice_points(std::size_t ambient_dim,
                                  std::span<const Hyperplane> equalities,
                                  std::span<const Inequality> facets,
                                  std::span<const Integer> lo,
                                  std::span<const Integer> hi, ContainMode mode);

/// Vertex bounding box of a description, rounded outward to integers.
void bounding_box(const DualDescription& d, std::vector<Integer>& lo,
                  std::vector<Integer>& hi);

/// Membership of integer points in s*P for a fixed polytope P and factor s.
class ScaledMembership {
 public:
  ScaledMembership(const DualDescription& p, long scale, ContainMode mode);
  bool contains(std::span<const std::int64_t> x) const;
  /// Membership of x - y.
  bool contains_difference(std::span<const std::int64_t> x,
                           std::span<const std::int64_t> y) const;

 private:
  template <typename Row>
  bool check(const Row& value_of) const;

  bool fast_ = true;
  std::size_t n_ = 0;
  // Rows: equalities first (count eq_count_), then facets.
  std::size_t eq_count_ = 0;
  std::vector<std::int64_t> a64_;
  std::vector<__int128> b128_;
  std::vector<Integer> a_, b_;
};

}  // namespace latcayley::detail

#endif  // LATCAYLEY_SRC_INT_SYSTEM_HPP_
