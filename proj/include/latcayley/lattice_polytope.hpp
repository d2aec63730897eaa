// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Lattice polytopes and their constructions: dilates, Minkowski sums, Cayley
// sums, lattice-point enumeration, edges, Cayley slices and normal fans.

#ifndef LATCAYLEY_LATTICE_POLYTOPE_HPP_
#define LATCAYLEY_LATTICE_POLYTOPE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "latcayley/exact_geometry.hpp"

namespace latcayley {

using LatticePoint = std::vector<std::int64_t>;

/// A finite set of lattice points, stored flat in lexicographic order.
class PointSet {
 public:
  explicit PointSet(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}
  /// Sorts and deduplicates.
  static PointSet from_flat(std::size_t ambient_dim, std::vector<std::int64_t> flat);
  static PointSet from_points(std::size_t ambient_dim,
                              const std::vector<LatticePoint>& points);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return dim_ ? data_.size() / dim_ : 0; }
  bool empty() const { return size() == 0; }
  std::span<const std::int64_t> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  LatticePoint point(std::size_t i) const;
  RationalPoint rational(std::size_t i) const;
  bool contains(std::span<const std::int64_t> p) const;
  std::vector<LatticePoint> points() const;
  const std::vector<std::int64_t>& flat() const { return data_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<std::int64_t> data_;
};

/// {a + b : a in A, b in B}.
PointSet point_set_sum(const PointSet& a, const PointSet& b);
/// {x + v : x in A}.
PointSet translate(const PointSet& a, std::span<const std::int64_t> v);

class LatticePolytope {
 public:
  /// conv(points). Throws on empty input or non-integer coordinates.
  static LatticePolytope from_vertices(std::span<const RationalPoint> points);
  static LatticePolytope from_vertices(const std::vector<LatticePoint>& points);
  /// Wraps an existing canonical description after checking its vertices.
  static LatticePolytope from_description(DualDescription d);

  const DualDescription& desc() const { return desc_; }
  std::size_t ambient_dim() const { return desc_.ambient_dim; }
  int dim() const { return desc_.dim; }
  const std::vector<RationalPoint>& vertices() const { return desc_.vertices; }
  std::vector<LatticePoint> int_vertices() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  DualDescription desc_;
};

LatticePolytope dilate(const LatticePolytope& p, long n);
LatticePolytope translate(const LatticePolytope& p, std::span<const std::int64_t> v);
LatticePolytope minkowski_sum(std::span<const LatticePolytope> ps);
/// conv of {e_i} x P_i in R^m x R^N; the m height coordinates come first.
LatticePolytope cayley_sum(std::span<const LatticePolytope> ps);

PointSet lattice_points(const LatticePolytope& p);
PointSet interior_lattice_points(const LatticePolytope& p);

struct Edge {
  RationalPoint from, to;
  Integer lattice_length;
};
std::vector<Edge> edges(const LatticePolytope& p);

/// Lattice points of (sum a_i) * (P_1 * ... * P_m) whose heights equal a,
/// enumerated on the Cayley polytope itself. `mode` selects the closed
/// polytope or its relative interior.
PointSet cayley_slice(std::span<const LatticePolytope> ps, std::span<const long> a,
                      ContainMode mode = ContainMode::Closed);

/// Whether every vertex normal cone of p lies in some vertex normal cone of q.
/// Both polytopes must be full-dimensional.
bool normal_fan_coarsens(const LatticePolytope& p, const LatticePolytope& q);

}  // namespace latcayley

#endif  // LATCAYLEY_LATTICE_POLYTOPE_HPP_
