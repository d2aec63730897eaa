// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "latcayley/lattice_polytope.hpp"

#include <algorithm>
#include <numeric>

#include "cone.hpp"
#include "int_system.hpp"

namespace latcayley {

PointSet PointSet::from_flat(std::size_t ambient_dim, std::vector<std::int64_t> flat) {
  PointSet s(ambient_dim);
  if (ambient_dim == 0) return s;
  const std::size_t n = flat.size() / ambient_dim;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto at = [&](std::size_t i) { return flat.begin() + i * ambient_dim; };
  auto less = [&](std::size_t i, std::size_t j) {
    return std::lexicographical_compare(at(i), at(i) + ambient_dim, at(j),
                                        at(j) + ambient_dim);
  };
  std::sort(order.begin(), order.end(), less);
  s.data_.reserve(flat.size());
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && !less(order[r - 1], order[r])) continue;
    s.data_.insert(s.data_.end(), at(order[r]), at(order[r]) + ambient_dim);
  }
  return s;
}

PointSet PointSet::from_points(std::size_t ambient_dim,
                               const std::vector<LatticePoint>& points) {
  std::vector<std::int64_t> flat;
  flat.reserve(points.size() * ambient_dim);
  for (const auto& p : points) {
    if (p.size() != ambient_dim) throw Error("dimension mismatch in point set");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return from_flat(ambient_dim, std::move(flat));
}

LatticePoint PointSet::point(std::size_t i) const {
  auto s = (*this)[i];
  return {s.begin(), s.end()};
}

RationalPoint PointSet::rational(std::size_t i) const {
  return RationalPoint::from_ints((*this)[i]);
}

bool PointSet::contains(std::span<const std::int64_t> p) const {
  if (p.size() != dim_) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto m = (*this)[mid];
    if (std::lexicographical_compare(m.begin(), m.end(), p.begin(), p.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < size() && std::equal(p.begin(), p.end(), (*this)[lo].begin());
}

std::vector<LatticePoint> PointSet::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

PointSet point_set_sum(const PointSet& a, const PointSet& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("dimension mismatch in point-set sum");
  const std::size_t n = a.ambient_dim();
  std::vector<std::int64_t> flat;
  flat.reserve(a.size() * b.size() * n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t c = 0; c < n; ++c) flat.push_back(a[i][c] + b[j][c]);
  return PointSet::from_flat(n, std::move(flat));
}

PointSet translate(const PointSet& a, std::span<const std::int64_t> v) {
  if (v.size() != a.ambient_dim()) throw Error("dimension mismatch in translation");
  std::vector<std::int64_t> flat = a.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += v[i % v.size()];
  return PointSet::from_flat(a.ambient_dim(), std::move(flat));
}

LatticePolytope LatticePolytope::from_vertices(std::span<const RationalPoint> points) {
  if (points.empty()) throw Error("empty point set");
  for (const auto& p : points)
    if (!p.is_integral()) throw Error("non-integer vertex " + p.to_string());
  return from_description(convex_hull(points));
}

LatticePolytope LatticePolytope::from_vertices(const std::vector<LatticePoint>& points) {
  std::vector<RationalPoint> rp;
  rp.reserve(points.size());
  for (const auto& p : points) rp.push_back(RationalPoint::from_ints(p));
  return from_vertices(rp);
}

LatticePolytope LatticePolytope::from_description(DualDescription d) {
  if (d.ambient_dim == 0) throw Error("lattice polytopes need ambient dimension >= 1");
  if (d.vertices.empty()) throw Error("empty point set");
  for (const auto& v : d.vertices)
    if (!v.is_integral()) throw Error("non-integer vertex " + v.to_string());
  LatticePolytope p;
  p.desc_ = std::move(d);
  return p;
}

std::vector<LatticePoint> LatticePolytope::int_vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(desc_.vertices.size());
  for (const auto& v : desc_.vertices) out.push_back(v.to_int64());
  return out;
}

LatticePolytope dilate(const LatticePolytope& p, long n) {
  if (n < 0) throw Error("dilation factor must be nonnegative");
  std::vector<RationalPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(Rational(n) * v);
  return LatticePolytope::from_vertices(pts);
}

LatticePolytope translate(const LatticePolytope& p, std::span<const std::int64_t> v) {
  if (v.size() != p.ambient_dim()) throw Error("dimension mismatch in translation");
  const RationalPoint t = RationalPoint::from_ints(v);
  std::vector<RationalPoint> pts;
  for (const auto& x : p.vertices()) pts.push_back(x + t);
  return LatticePolytope::from_vertices(pts);
}

LatticePolytope minkowski_sum(std::span<const LatticePolytope> ps) {
  if (ps.empty()) throw Error("Minkowski sum of an empty list");
  LatticePolytope acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i].ambient_dim() != acc.ambient_dim())
      throw Error("dimension mismatch in Minkowski sum");
    std::vector<RationalPoint> pts;
    pts.reserve(acc.vertices().size() * ps[i].vertices().size());
    for (const auto& a : acc.vertices())
      for (const auto& b : ps[i].vertices()) pts.push_back(a + b);
    acc = LatticePolytope::from_vertices(pts);
  }
  return acc;
}

LatticePolytope cayley_sum(std::span<const LatticePolytope> ps) {
  if (ps.empty()) throw Error("Cayley sum of an empty list");
  const std::size_t m = ps.size();
  const std::size_t n = ps.front().ambient_dim();
  std::vector<RationalPoint> pts;
  for (std::size_t i = 0; i < m; ++i) {
    if (ps[i].ambient_dim() != n) throw Error("dimension mismatch in Cayley sum");
    for (const auto& v : ps[i].vertices()) {
      RationalPoint x = RationalPoint::zeros(m + n);
      x[i] = 1;
      for (std::size_t j = 0; j < n; ++j) x[m + j] = v[j];
      pts.push_back(std::move(x));
    }
  }
  return LatticePolytope::from_vertices(pts);
}

namespace {

PointSet enumerate(const DualDescription& d, ContainMode mode) {
  std::vector<Integer> lo, hi;
  detail::bounding_box(d, lo, hi);
  return detail::enumerate_lattice_points(d.ambient_dim, d.equalities, d.facets, lo,
                                          hi, mode);
}

}  // namespace

PointSet lattice_points(const LatticePolytope& p) {
  return enumerate(p.desc(), ContainMode::Closed);
}

PointSet interior_lattice_points(const LatticePolytope& p) {
  return enumerate(p.desc(), ContainMode::RelativeInterior);
}

std::vector<Edge> edges(const LatticePolytope& p) {
  std::vector<Edge> out;
  if (p.dim() < 1) return out;
  const auto& vs = p.vertices();
  const auto& fs = p.desc().facets;
  std::vector<detail::Bits> tight(vs.size(), detail::Bits(fs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (sgn(fs[f].slack(vs[i])) == 0) tight[i].set(f);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      // The smallest face holding both is an edge iff it has no other vertex.
      const detail::Bits common = tight[i] & tight[j];
      bool edge = true;
      for (std::size_t k = 0; k < vs.size() && edge; ++k)
        if (k != i && k != j && common.is_subset_of(tight[k])) edge = false;
      if (!edge) continue;
      Integer g = 0;
      for (std::size_t c = 0; c < p.ambient_dim(); ++c) {
        Integer diff = Integer(vs[j][c] - vs[i][c]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
      }
      out.push_back({vs[i], vs[j], g});
    }
  }
  return out;
}

PointSet cayley_slice(std::span<const LatticePolytope> ps, std::span<const long> a,
                      ContainMode mode) {
  if (ps.size() != a.size())
    throw Error("height vector length " + std::to_string(a.size()) +
                " does not match " + std::to_string(ps.size()) + " polytopes");
  long total = 0;
  for (long ai : a) {
    if (ai < 0) throw Error("heights must be nonnegative");
    total += ai;
  }
  const std::size_t m = ps.size();
  const DualDescription d = dilate(cayley_sum(ps), total).desc();
  std::vector<Hyperplane> eqs = d.equalities;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> normal(d.ambient_dim, Integer(0));
    normal[i] = 1;
    eqs.push_back(Hyperplane::make(std::move(normal), Integer(a[i])));
  }
  std::vector<Integer> lo, hi;
  detail::bounding_box(d, lo, hi);
  return detail::enumerate_lattice_points(d.ambient_dim, eqs, d.facets, lo, hi, mode);
}

bool normal_fan_coarsens(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw Error("dimension mismatch");
  const int n = static_cast<int>(p.ambient_dim());
  if (p.dim() != n || q.dim() != n) throw Error("requires full-dimensional polytopes");

  const auto& pf = p.desc().facets;
  // Maximum of each facet normal of p over q.
  std::vector<Rational> qmax(pf.size());
  std::vector<std::vector<bool>> argmax(pf.size(),
                                        std::vector<bool>(q.vertices().size()));
  for (std::size_t f = 0; f < pf.size(); ++f) {
    std::vector<Rational> vals;
    for (const auto& w : q.vertices()) {
      Rational s = 0;
      for (int c = 0; c < n; ++c) s += pf[f].normal[c] * w[c];
      vals.push_back(s);
    }
    qmax[f] = *std::max_element(vals.begin(), vals.end());
    for (std::size_t k = 0; k < vals.size(); ++k) argmax[f][k] = vals[k] == qmax[f];
  }
  // The normal cone at v is spanned by the normals of the facets through v;
  // it sits inside the cone at w iff w maximizes every one of them.
  for (const auto& v : p.vertices()) {
    std::vector<bool> ok(q.vertices().size(), true);
    for (std::size_t f = 0; f < pf.size(); ++f) {
      if (sgn(pf[f].slack(v)) != 0) continue;
      for (std::size_t k = 0; k < ok.size(); ++k) ok[k] = ok[k] && argmax[f][k];
    }
    if (std::none_of(ok.begin(), ok.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

}  // namespace latcayley
