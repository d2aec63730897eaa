// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Double-description engine for pointed polyhedral cones over the integers.
// Used in both directions: facets of a point hull are the extreme rays of the
// homogenized polar cone, and arrangement cells are bounded polytopes whose
// homogenized cones get split hyperplane by hyperplane.

#ifndef LATCAYLEY_SRC_CONE_HPP_
#define LATCAYLEY_SRC_CONE_HPP_

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latcayley/arith.hpp"

namespace latcayley::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct Ray {
  std::vector<Integer> v;
  Bits zeros;  // constraints tight on this ray
};

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Position of the relative interior of a cone with respect to {c·y = 0}.
enum class Side { Negative, Zero, Positive, Cut };

/// A pointed cone given by its extreme rays, each tagged with the set of
/// constraints it satisfies with equality.
class Cone {
 public:
  Cone() = default;
  Cone(int cone_dim, std::size_t num_constraints, std::vector<Ray> rays)
      : cone_dim_(cone_dim), num_constraints_(num_constraints),
        rays_(std::move(rays)) {}

  /// The simplicial cone {y : rows[i]·y >= 0}. `rows` must be square and
  /// invertible; row i is recorded as constraint ids[i] in bitsets of size
  /// `capacity`.
  static Cone simplicial(const std::vector<std::vector<Integer>>& rows,
                         std::span<const std::size_t> ids,
                         std::size_t capacity);

  /// Intersects in place with {c·y >= 0}, recording it as constraint `id`.
  void intersect(std::span<const Integer> c, std::size_t id);

  struct Split;
  /// Classifies the relative interior against {c·y = 0}. On Side::Cut the
  /// three pieces are produced, each carrying one extra constraint bit.
  Split split(std::span<const Integer> c) const;
  Side classify(std::span<const Integer> c) const;

  int cone_dim() const { return cone_dim_; }
  std::size_t num_constraints() const { return num_constraints_; }
  const std::vector<Ray>& rays() const { return rays_; }

 private:
  int cone_dim_ = 0;
  std::size_t num_constraints_ = 0;
  std::vector<Ray> rays_;
};

struct Cone::Split {
  Side side = Side::Cut;
  std::optional<Cone> negative, zero, positive;
};

}  // namespace latcayley::detail

#endif  // LATCAYLEY_SRC_CONE_HPP_
