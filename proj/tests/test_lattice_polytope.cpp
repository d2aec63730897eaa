// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace latcayley;
using namespace testing_helpers;

namespace {

std::vector<LatticePoint> ints(const LatticePolytope& p) { return p.int_vertices(); }

}  // namespace

TEST(FromVertices, Examples) {
  EXPECT_EQ(square().dim(), 2);
  const auto p2 = P({{1, 1}, {-1, -1}});
  EXPECT_EQ(p2.dim(), 1);
  EXPECT_EQ(reeve().dim(), 3);
  const std::vector<RationalPoint> half{RationalPoint({Rational(1, 2), Rational(1)})};
  EXPECT_THROW(LatticePolytope::from_vertices(half), Error);
  EXPECT_THROW(P({}), Error);
}

TEST(Dilate, Examples) {
  EXPECT_EQ(ints(dilate(square(), 2)),
            (std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  const auto z = dilate(P({{0}, {1}}), 0);
  EXPECT_EQ(z.dim(), 0);
  EXPECT_EQ(ints(z), (std::vector<LatticePoint>{{0}}));
  EXPECT_EQ(ints(dilate(triangle(), 3)), (std::vector<LatticePoint>{{0, 0}, {0, 3}, {3, 0}}));
  EXPECT_THROW(dilate(square(), -1), Error);
}

TEST(MinkowskiSum, Examples) {
  const std::vector<LatticePolytope> ex{P({{0, 0}, {1, 2}}), P({{0, 0}, {1, 0}})};
  EXPECT_EQ(ints(minkowski_sum(ex)),
            (std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 2}, {2, 2}}));
  const std::vector<LatticePolytope> shift{square(), P({{3, -1}})};
  const LatticePoint v{3, -1};
  EXPECT_EQ(minkowski_sum(shift), translate(square(), v));
  const std::vector<LatticePolytope> pent{square(), triangle()};
  EXPECT_EQ(ints(minkowski_sum(pent)),
            (std::vector<LatticePoint>{{0, 0}, {0, 2}, {1, 2}, {2, 0}, {2, 1}}));
  const std::vector<LatticePolytope> bad{square(), reeve()};
  EXPECT_THROW(minkowski_sum(bad), Error);
}

TEST(MinkowskiSum, MatchesBruteForceHullOfVertexSums) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto a = random_small(100 + s, 2);
    Rng rng(s);
    const auto b = random_lattice_polytope(rng, a.ambient_dim(),
                                           static_cast<int>(rng.uniform(0, static_cast<long>(a.ambient_dim()))), 2,
                                           a.ambient_dim() + 2);
    const std::vector<LatticePolytope> ps{a, b}, rev{b, a};
    const auto m = minkowski_sum(ps);
    EXPECT_EQ(m, minkowski_sum(rev));
    std::vector<oracle::Vec> sums;
    for (const auto& x : a.vertices())
      for (const auto& y : b.vertices()) sums.push_back((x + y).coords);
    EXPECT_EQ(q_vertices(m), oracle::vertices_of(sums)) << "seed " << s;
  }
}

TEST(CayleySum, Examples) {
  const std::vector<LatticePolytope> two_points{P({{2}}), P({{5}})};
  EXPECT_EQ(ints(cayley_sum(two_points)), (std::vector<LatticePoint>{{0, 1, 5}, {1, 0, 2}}));
  const std::vector<LatticePolytope> e19{P({{1, 0}, {0, 1}}), P({{1, 1}, {-1, -1}})};
  EXPECT_EQ(ints(cayley_sum(e19)),
            (std::vector<LatticePoint>{{0, 1, -1, -1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 1, 0}}));
  const std::vector<LatticePolytope> e24{P({{0, 0}, {1, 2}}), P({{0, 0}, {1, 0}})};
  EXPECT_EQ(ints(cayley_sum(e24)),
            (std::vector<LatticePoint>{{0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 1, 2}}));
}

TEST(CayleySum, LatticePointsSitAtUnitHeights) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto a = random_small(300 + s, 2);
    const auto b = random_small(400 + s, 2);
    if (a.ambient_dim() != b.ambient_dim()) continue;
    const std::vector<LatticePolytope> ps{a, b};
    const auto pts = lattice_points(cayley_sum(ps));
    EXPECT_EQ(pts.size(), lattice_points(a).size() + lattice_points(b).size());
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i][0] + pts[i][1], 1);
  }
}

TEST(LatticePoints, Examples) {
  EXPECT_EQ(lattice_points(square()).size(), 4u);
  EXPECT_EQ(to_set(lattice_points(dilate(triangle(), 2))),
            (std::set<oracle::IVec>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}));
  EXPECT_EQ(to_set(lattice_points(reeve())), oracle::lattice_points(ints(reeve())));
  EXPECT_EQ(lattice_points(reeve()).size(), 4u);
}

TEST(LatticePoints, MatchBoundingBoxOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto p = random_small(500 + s);
    for (long k = 1; k <= 2; ++k)
      EXPECT_EQ(to_set(lattice_points(dilate(p, k))), oracle::lattice_points(ints(p), k))
          << "seed " << s << " k " << k;
  }
}

TEST(InteriorLatticePoints, Examples) {
  EXPECT_TRUE(interior_lattice_points(square()).empty());
  EXPECT_EQ(to_set(interior_lattice_points(P({{0}, {2}}))), (std::set<oracle::IVec>{{1}}));
  EXPECT_EQ(to_set(interior_lattice_points(dilate(triangle(), 3))), (std::set<oracle::IVec>{{1, 1}}));
  const auto pt = P({{4, 4}});
  EXPECT_EQ(to_set(interior_lattice_points(pt)), (std::set<oracle::IVec>{{4, 4}}));
}

TEST(InteriorLatticePoints, MatchStrictFilterOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto p = random_small(600 + s);
    if (p.dim() != static_cast<int>(p.ambient_dim()) || p.dim() == 0) continue;
    for (long k = 1; k <= 3; ++k)
      EXPECT_EQ(to_set(interior_lattice_points(dilate(p, k))), oracle::interior_points(ints(p), k))
          << "seed " << s << " k " << k;
  }
}

TEST(LatticePoints, DilateContainsIteratedSumset) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_small(700 + s, 2);
    const auto base = lattice_points(p);
    PointSet acc = base;
    for (long n = 2; n <= 3; ++n) {
      acc = point_set_sum(acc, base);
      const auto big = lattice_points(dilate(p, n));
      for (std::size_t i = 0; i < acc.size(); ++i) EXPECT_TRUE(big.contains(acc[i]));
    }
  }
}

TEST(PointSetSum, Examples) {
  const auto a = PointSet::from_points(2, {{0, 0}, {1, 2}});
  const auto b = PointSet::from_points(2, {{0, 0}, {1, 0}});
  EXPECT_EQ(to_set(point_set_sum(a, b)),
            (std::set<oracle::IVec>{{0, 0}, {1, 0}, {1, 2}, {2, 2}}));
  EXPECT_EQ(point_set_sum(a, PointSet::from_points(2, {{0, 0}})), a);
  const auto u = PointSet::from_points(1, {{0}, {1}});
  EXPECT_EQ(to_set(point_set_sum(u, u)), (std::set<oracle::IVec>{{0}, {1}, {2}}));
  EXPECT_THROW(point_set_sum(a, u), Error);
  EXPECT_EQ(point_set_sum(a, b), point_set_sum(b, a));
}

TEST(Edges, Examples) {
  auto e = edges(P({{0, 0}, {1, 2}}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].lattice_length, 1);
  e = edges(P({{0, 0}, {2, 4}}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].lattice_length, 2);
  e = edges(square());
  ASSERT_EQ(e.size(), 4u);
  for (const auto& x : e) EXPECT_EQ(x.lattice_length, 1);
  EXPECT_TRUE(edges(P({{1, 1}})).empty());
  EXPECT_EQ(edges(reeve()).size(), 6u);
  EXPECT_EQ(edges(P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})).size(), 12u);
}

TEST(CayleySlice, Examples) {
  const std::vector<LatticePolytope> ps{P({{0}, {1}}), P({{0}, {2}})};
  const std::vector<long> a{1, 1};
  EXPECT_EQ(to_set(cayley_slice(ps, a)),
            (std::set<oracle::IVec>{{1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}}));
  const std::vector<long> e2{0, 1};
  EXPECT_EQ(to_set(cayley_slice(ps, e2)), (std::set<oracle::IVec>{{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}));
  const std::vector<LatticePolytope> ex{P({{0, 0}, {1, 2}}), P({{0, 0}, {1, 0}})};
  EXPECT_EQ(to_set(cayley_slice(ex, a)),
            (std::set<oracle::IVec>{{1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}}));
  const std::vector<long> wrong{1};
  EXPECT_THROW(cayley_slice(ex, wrong), Error);
}

TEST(CayleySlice, ProjectsToDilatedMinkowskiSums) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto a = random_small(800 + s, 2);
    Rng rng(s + 1);
    const auto b = random_lattice_polytope(rng, a.ambient_dim(), 1, 2, 3);
    const std::vector<LatticePolytope> ps{a, b};
    for (long x = 0; x <= 2; ++x)
      for (long y = 0; y <= 2; ++y) {
        const std::vector<long> h{x, y};
        std::set<oracle::IVec> proj;
        for (const auto& p : cayley_slice(ps, h).points()) proj.insert(oracle::IVec(p.begin() + 2, p.end()));
        const std::vector<LatticePolytope> parts{dilate(a, x), dilate(b, y)};
        EXPECT_EQ(proj, to_set(lattice_points(minkowski_sum(parts))));
        if (x >= 1 && y >= 1) {
          std::set<oracle::IVec> iproj;
          for (const auto& p : cayley_slice(ps, h, ContainMode::RelativeInterior).points())
            iproj.insert(oracle::IVec(p.begin() + 2, p.end()));
          EXPECT_EQ(iproj, to_set(interior_lattice_points(minkowski_sum(parts))));
        }
      }
  }
}

TEST(NormalFan, Examples) {
  EXPECT_TRUE(normal_fan_coarsens(square(), square()));
  EXPECT_THROW(normal_fan_coarsens(square(), P({{0, 0}, {1, 0}})), Error);
  const std::vector<LatticePolytope> parts{square(), triangle()};
  const auto pent = minkowski_sum(parts);
  EXPECT_TRUE(normal_fan_coarsens(pent, square()));
  EXPECT_TRUE(normal_fan_coarsens(pent, triangle()));
  EXPECT_FALSE(normal_fan_coarsens(square(), pent));
}

TEST(NormalFan, SummandsAlwaysCoarsen) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    Rng rng(s + 40);
    const auto q = random_lattice_polytope(rng, 2, 2, 2, 4);
    const auto r = random_lattice_polytope(rng, 2, static_cast<int>(rng.uniform(0, 2)), 2, 3);
    const std::vector<LatticePolytope> parts{q, r};
    EXPECT_TRUE(normal_fan_coarsens(minkowski_sum(parts), q));
  }
}

TEST(PolytopeFile, RoundTripAndErrors) {
  const std::vector<LatticePolytope> e19{P({{1, 0}, {0, 1}}), P({{1, 1}, {-1, -1}})};
  const auto cay = cayley_sum(e19);
  const std::string path = testing::TempDir() + "/cayley.json";
  save_polytope(cay, path, std::string("c"));
  const auto back = load_polytope(path);
  EXPECT_EQ(back.polytope, cay);
  EXPECT_EQ(back.name, std::string("c"));
  EXPECT_EQ(load("unit_square"), square());
  EXPECT_EQ(load("redundant_square"), square());
}
