// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>

#include "helpers.hpp"

using namespace latcayley;
using namespace testing_helpers;

namespace {

std::vector<RationalPoint> pts(std::initializer_list<std::initializer_list<long>> v) {
  std::vector<RationalPoint> out;
  for (auto p : v) out.push_back(RationalPoint::from_ints(p));
  return out;
}

Rational q(long a, long b) { return Rational(a, b); }

std::vector<RationalPoint> random_cloud(Rng& rng, std::size_t n, std::size_t k, long b) {
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < k; ++i) {
    RationalPoint p = RationalPoint::zeros(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = Rational(rng.uniform(-b, b), rng.uniform(1, 2));
    for (auto& c : p.coords) c.canonicalize();
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(AffineHull, CollinearPoints) {
  const auto h = affine_hull(pts({{0, 0}, {1, 2}, {2, 4}}));
  EXPECT_EQ(h.dim, 1);
  ASSERT_EQ(h.equalities.size(), 1u);
  EXPECT_EQ(h.equalities[0], Hyperplane::make({2, -1}, 0));
}

TEST(AffineHull, SpanningAndSegment) {
  EXPECT_EQ(affine_hull(pts({{0, 0}, {1, 0}, {0, 1}})).dim, 2);
  EXPECT_TRUE(affine_hull(pts({{0, 0}, {1, 0}, {0, 1}})).equalities.empty());
  const auto h = affine_hull(pts({{0, 0}, {1, 2}}));
  EXPECT_EQ(h.dim, 1);
  EXPECT_EQ(h.equalities.at(0), Hyperplane::make({2, -1}, 0));
}

TEST(AffineHull, EmptyInputIsAnError) {
  EXPECT_THROW(affine_hull(std::vector<RationalPoint>{}), Error);
  EXPECT_THROW(dimension(std::vector<RationalPoint>{}), Error);
  EXPECT_THROW(convex_hull(std::vector<RationalPoint>{}), Error);
}

TEST(Hyperplane, CanonicalSignAndGcd) {
  const auto h = Hyperplane::make({-2, 4}, -6);
  EXPECT_EQ(h.normal, (std::vector<Integer>{1, -2}));
  EXPECT_EQ(h.offset, 3);
  EXPECT_EQ(h.eval(R({3, 0})), 0);
}

TEST(ConvexHull, InteriorPointDropped) {
  auto v = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  v.push_back(RationalPoint({q(1, 2), q(1, 2)}));
  const auto d = convex_hull(v);
  EXPECT_EQ(d.vertices.size(), 4u);
  EXPECT_EQ(d.facets.size(), 4u);
  EXPECT_EQ(d.dim, 2);
}

TEST(ConvexHull, DilatedSimplexFacets) {
  const auto d = convex_hull(pts({{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_EQ(d.vertices.size(), 3u);
  std::set<std::pair<std::vector<Integer>, Integer>> got;
  for (const auto& f : d.facets) got.insert({f.normal, f.offset});
  const std::set<std::pair<std::vector<Integer>, Integer>> want{
      {{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 2}};
  EXPECT_EQ(got, want);
}

TEST(ConvexHull, CayleySumOfSegments) {
  const auto d = convex_hull(pts({{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, -1, -1}}));
  EXPECT_EQ(d.vertices.size(), 4u);
  EXPECT_EQ(d.dim, 3);
  ASSERT_EQ(d.equalities.size(), 1u);
  EXPECT_EQ(d.equalities[0], Hyperplane::make({1, 1, 0, 0}, 1));
}

TEST(ConvexHull, SinglePoint) {
  const auto d = convex_hull(pts({{3, 7}}));
  EXPECT_EQ(d.dim, 0);
  EXPECT_TRUE(d.facets.empty());
  EXPECT_EQ(d.equalities.size(), 2u);
  EXPECT_EQ(dimension(pts({{3, 7}})), 0);
}

TEST(ConvexHull, MatchesBruteForceFacetsAndVertices) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto cloud = random_cloud(rng, n, static_cast<std::size_t>(rng.uniform(n + 1, n + 5)), 3);
    const auto d = convex_hull(cloud);
    std::vector<oracle::Vec> qc;
    for (const auto& p : cloud) qc.push_back(p.coords);
    const auto want_vertices = oracle::vertices_of(qc);
    std::vector<oracle::Vec> got_vertices;
    for (const auto& v : d.vertices) got_vertices.push_back(v.coords);
    EXPECT_EQ(got_vertices, want_vertices) << "trial " << trial;
    if (d.dim != static_cast<int>(n)) continue;
    std::vector<oracle::Facet> got;
    for (const auto& f : d.facets) got.push_back({f.normal, f.offset});
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::facets(qc)) << "trial " << trial;
  }
}

TEST(ConvexHull, RoundTripIsIdentity) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cloud = random_cloud(rng, static_cast<std::size_t>(rng.uniform(1, 4)),
                                    static_cast<std::size_t>(rng.uniform(1, 7)), 3);
    const auto d = convex_hull(cloud);
    EXPECT_EQ(convex_hull(d.vertices), d);
    EXPECT_EQ(d.dim + static_cast<int>(d.equalities.size()), static_cast<int>(d.ambient_dim));
    std::vector<RationalPoint> shuffled(cloud.rbegin(), cloud.rend());
    EXPECT_EQ(convex_hull(shuffled), d);
  }
}

TEST(Contains, SquareInteriorAndBoundary) {
  const auto& d = square().desc();
  const RationalPoint mid({q(1, 2), q(1, 2)}), edge({q(1, 1), q(1, 2)});
  EXPECT_TRUE(contains(d, mid, ContainMode::RelativeInterior));
  EXPECT_FALSE(contains(d, edge, ContainMode::RelativeInterior));
  EXPECT_TRUE(contains(d, edge, ContainMode::Closed));
  EXPECT_THROW(contains(d, R({0, 0, 0}), ContainMode::Closed), Error);
}

TEST(Contains, ReeveDoubleBarycentricCoordinates) {
  const auto d2 = dilate(reeve(), 2);
  EXPECT_TRUE(contains(d2.desc(), R({1, 1, 1}), ContainMode::Closed));
  // Independent barycentric solve against the vertices of 2R.
  std::vector<oracle::Vec> a(4, oracle::Vec(4));
  const auto& vs = d2.vertices();
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 3; ++i) a[i][j] = vs[j][i];
    a[3][j] = 1;
  }
  oracle::Vec lam;
  bool unique = false;
  ASSERT_TRUE(oracle::solve(a, {1, 1, 1, 1}, lam, unique));
  ASSERT_TRUE(unique);
  for (const auto& l : lam) EXPECT_EQ(l, q(1, 4));
}

TEST(Contains, AgreesWithCaratheodoryOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto cloud = random_cloud(rng, n, n + 2, 2);
    const auto d = convex_hull(cloud);
    std::vector<oracle::Vec> qc;
    for (const auto& p : cloud) qc.push_back(p.coords);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_cloud(rng, n, 1, 3).front();
      const bool closed = contains(d, x, ContainMode::Closed);
      EXPECT_EQ(closed, oracle::in_hull(qc, x.coords));
      if (contains(d, x, ContainMode::RelativeInterior)) {
        EXPECT_TRUE(closed);
      }
    }
  }
}

TEST(Contains, RelativeInteriorDiffersOnlyOnFacetHyperplanes) {
  const auto d = convex_hull(pts({{0, 0}, {3, 0}, {0, 3}, {2, 2}}));
  for (long x = -1; x <= 4; ++x)
    for (long y = -1; y <= 4; ++y) {
      const auto p = R({x, y});
      bool on_facet = false;
      for (const auto& f : d.facets) on_facet = on_facet || f.slack(p) == 0;
      const bool closed = contains(d, p, ContainMode::Closed);
      EXPECT_EQ(closed && !on_facet, contains(d, p, ContainMode::RelativeInterior));
    }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(pts({{3, 7}})), 0);
  EXPECT_EQ(dimension(pts({{0, 0}, {1, 0}, {1, 2}, {2, 2}})), 2);
  EXPECT_EQ(dimension(reeve().vertices()), 3);
}

TEST(Arrangement, SegmentSplitAtOne) {
  const auto within = convex_hull(pts({{0}, {2}}));
  const std::vector<Hyperplane> hs{Hyperplane::make({1}, 1)};
  const auto s = arrangement_sample_points(hs, within);
  const std::vector<RationalPoint> want{R({0}), RationalPoint({q(1, 2)}), R({1}),
                                        RationalPoint({q(3, 2)}), R({2})};
  EXPECT_EQ(s, want);
}

TEST(Arrangement, SquareWithoutHyperplanes) {
  const auto cells = arrangement_cells({}, square().desc());
  EXPECT_EQ(cells.size(), 9u);
  std::map<int, int> by_dim;
  for (const auto& c : cells) ++by_dim[c.dim];
  EXPECT_EQ(by_dim[0], 4);
  EXPECT_EQ(by_dim[1], 4);
  EXPECT_EQ(by_dim[2], 1);
}

TEST(Arrangement, TranslatesOfTheSquare) {
  std::vector<Hyperplane> hs;
  for (long t = 0; t <= 2; ++t) {
    hs.push_back(Hyperplane::make({1, 0}, t));
    hs.push_back(Hyperplane::make({0, 1}, t));
  }
  const auto within = dilate(square(), 2).desc();
  const auto cells = arrangement_cells(hs, within);
  EXPECT_EQ(cells.size(), 25u);  // 9 vertices, 12 edges, 4 squares
  const auto s = arrangement_sample_points(hs, within);
  EXPECT_NE(std::find(s.begin(), s.end(), R({1, 1})), s.end());
}

TEST(Arrangement, SamplesHaveDistinctSignatures) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_small(900 + trial, 2);
    std::vector<Hyperplane> hs;
    for (int k = 0; k < 3; ++k) {
      std::vector<Integer> a(p.ambient_dim());
      for (auto& x : a) x = rng.uniform(-2, 2);
      if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; })) a[0] = 1;
      hs.push_back(Hyperplane::make(a, rng.uniform(-2, 2)));
    }
    std::set<std::vector<int>> seen;
    for (const auto& c : arrangement_cells(hs, p.desc())) {
      EXPECT_TRUE(contains(p.desc(), c.sample, ContainMode::Closed));
      std::vector<int> sig;
      for (const auto& h : hs) sig.push_back(sign(h.eval(c.sample)));
      for (const auto& f : p.desc().facets) sig.push_back(f.slack(c.sample) == 0);
      EXPECT_TRUE(seen.insert(sig).second);
    }
  }
}
