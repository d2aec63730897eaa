// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LATCAYLEY_TESTS_HELPERS_HPP_
#define LATCAYLEY_TESTS_HELPERS_HPP_

#include <set>
#include <string>
#include <vector>

#include "latcayley/harness.hpp"
#include "oracle.hpp"

namespace testing_helpers {

using namespace latcayley;

inline LatticePolytope P(const std::vector<LatticePoint>& v) {
  return LatticePolytope::from_vertices(v);
}

inline RationalPoint R(std::initializer_list<long> v) { return RationalPoint::from_ints(v); }

inline std::set<oracle::IVec> to_set(const PointSet& s) {
  std::set<oracle::IVec> out;
  for (const auto& p : s.points()) out.insert(p);
  return out;
}

inline oracle::Vec to_q(const RationalPoint& p) { return p.coords; }

inline std::vector<oracle::Vec> q_vertices(const LatticePolytope& p) {
  std::vector<oracle::Vec> out;
  for (const auto& v : p.vertices()) out.push_back(v.coords);
  return out;
}

inline std::string fixture(const std::string& name) {
  return std::string(LATCAYLEY_FIXTURES) + "/" + name + ".json";
}

inline LatticePolytope load(const std::string& name) { return load_polytope(fixture(name)).polytope; }

inline const LatticePolytope& reeve() {
  static const LatticePolytope r = P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  return r;
}
inline const LatticePolytope& square() {
  static const LatticePolytope s = P({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  return s;
}
inline const LatticePolytope& triangle() {
  static const LatticePolytope t = P({{0, 0}, {1, 0}, {0, 1}});
  return t;
}

// Small random polytopes for property tests: ambient 1..3, coordinates in
// [-2, 2] (1 for dim 3 to keep the oracles quick).
inline LatticePolytope random_small(std::uint64_t seed, int max_ambient = 3) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.uniform(1, max_ambient));
  const int d = static_cast<int>(rng.uniform(0, static_cast<long>(n)));
  const long b = d >= 3 ? 1 : 2;
  const auto pts = static_cast<std::size_t>(d + 1 + rng.uniform(0, 2));
  return random_lattice_polytope(rng, n, d, b, pts);
}

}  // namespace testing_helpers

#endif  // LATCAYLEY_TESTS_HELPERS_HPP_
