// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "latcayley/exact_geometry.hpp"

#include <algorithm>

#include "cells.hpp"
#include "cone.hpp"
#include "linalg.hpp"

namespace latcayley {

using detail::RatMatrix;

Hyperplane Hyperplane::make(std::vector<Integer> normal, Integer offset) {
  auto lead = std::find_if(normal.begin(), normal.end(),
                           [](const Integer& x) { return sgn(x) != 0; });
  if (lead == normal.end()) throw Error("hyperplane with zero normal");
  make_primitive(normal, offset);
  if (sgn(*lead) < 0) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
  return Hyperplane{std::move(normal), std::move(offset)};
}

Rational Hyperplane::eval(const RationalPoint& x) const {
  if (x.ambient_dim() != normal.size()) throw Error("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
  return s - offset;
}

Inequality Inequality::make(std::vector<Integer> normal, Integer offset) {
  make_primitive(normal, offset);
  return Inequality{std::move(normal), std::move(offset)};
}

Rational Inequality::slack(const RationalPoint& x) const {
  if (x.ambient_dim() != normal.size()) throw Error("dimension mismatch");
  Rational s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s -= Rational(normal[i]) * x[i];
  return s;
}

bool operator<(const Inequality& a, const Inequality& b) {
  for (std::size_t i = 0; i < a.normal.size() && i < b.normal.size(); ++i) {
    int c = cmp(a.normal[i], b.normal[i]);
    if (c) return c < 0;
  }
  if (a.normal.size() != b.normal.size()) return a.normal.size() < b.normal.size();
  return a.offset < b.offset;
}

namespace {

void check_points(std::span<const RationalPoint> points) {
  if (points.empty()) throw Error("empty point set");
  for (const auto& p : points)
    if (p.ambient_dim() != points.front().ambient_dim())
      throw Error("dimension mismatch among points");
}

std::vector<RationalPoint> sorted_unique(std::span<const RationalPoint> points) {
  std::vector<RationalPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

AffineHull affine_hull(std::span<const RationalPoint> points) {
  check_points(points);
  const std::size_t n = points.front().ambient_dim();
  const RationalPoint& p0 = points.front();
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back((points[i] - p0).coords);
  auto piv = detail::rref(diffs, n);

  // Null space of the difference vectors, one vector per non-pivot column.
  RatMatrix eqs;
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> row(n + 1, Rational(0));
    row[j] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) row[piv[r]] = -diffs[r][j];
    for (std::size_t c = 0; c < n; ++c) row[n] += row[c] * p0[c];
    eqs.push_back(std::move(row));
  }
  detail::rref(eqs, n);

  AffineHull out;
  out.dim = static_cast<int>(piv.size());
  for (const auto& row : eqs) {
    auto ints = clear_denominators(row);
    Integer off = ints.back();
    ints.pop_back();
    out.equalities.push_back(Hyperplane::make(std::move(ints), std::move(off)));
  }
  return out;
}

int dimension(std::span<const RationalPoint> points) {
  return affine_hull(points).dim;
}

std::optional<AffineChart> AffineChart::from_equalities(
    std::size_t ambient_dim, std::span<const Hyperplane> equalities) {
  RatMatrix m;
  for (const auto& h : equalities) {
    if (h.normal.size() != ambient_dim) throw Error("dimension mismatch");
    std::vector<Rational> row;
    row.reserve(ambient_dim + 1);
    for (const auto& a : h.normal) row.emplace_back(a);
    row.emplace_back(h.offset);
    m.push_back(std::move(row));
  }
  auto piv = detail::rref(m, ambient_dim);
  if (m.size() > piv.size()) return std::nullopt;

  AffineChart c;
  c.ambient_dim_ = ambient_dim;
  c.pivots_ = piv;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) c.free_.push_back(j);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    c.rhs_.push_back(m[r][ambient_dim]);
    std::vector<Rational> coefs;
    for (auto f : c.free_) coefs.push_back(m[r][f]);
    c.coef_.push_back(std::move(coefs));
  }
  return c;
}

RationalPoint AffineChart::to_local(const RationalPoint& x) const {
  if (x.ambient_dim() != ambient_dim_) throw Error("dimension mismatch");
  RationalPoint y;
  y.coords.reserve(free_.size());
  for (auto f : free_) y.coords.push_back(x[f]);
  return y;
}

RationalPoint AffineChart::lift(const RationalPoint& y) const {
  if (y.ambient_dim() != free_.size()) throw Error("dimension mismatch");
  RationalPoint x = RationalPoint::zeros(ambient_dim_);
  for (std::size_t j = 0; j < free_.size(); ++j) x[free_[j]] = y[j];
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational v = rhs_[i];
    for (std::size_t j = 0; j < free_.size(); ++j) v -= coef_[i][j] * y[j];
    x[pivots_[i]] = v;
  }
  return x;
}

Inequality AffineChart::restrict(std::span<const Integer> a, const Integer& b) const {
  if (a.size() != ambient_dim_) throw Error("dimension mismatch");
  std::vector<Rational> row(free_.size() + 1);
  for (std::size_t j = 0; j < free_.size(); ++j) row[j] = a[free_[j]];
  row.back() = b;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Integer& ap = a[pivots_[i]];
    if (sgn(ap) == 0) continue;
    for (std::size_t j = 0; j < free_.size(); ++j) row[j] -= ap * coef_[i][j];
    row.back() -= ap * rhs_[i];
  }
  auto ints = clear_denominators(row);
  Integer off = ints.back();
  ints.pop_back();
  return Inequality::make(std::move(ints), std::move(off));
}

AffineChart chart_of(const DualDescription& p) {
  auto c = AffineChart::from_equalities(p.ambient_dim, p.equalities);
  if (!c) throw Error("inconsistent affine hull");
  return *c;
}

DualDescription convex_hull(std::span<const RationalPoint> points) {
  check_points(points);
  const auto pts = sorted_unique(points);
  const std::size_t n = pts.front().ambient_dim();
  AffineHull ah = affine_hull(pts);

  DualDescription out;
  out.ambient_dim = n;
  out.dim = ah.dim;
  out.equalities = ah.equalities;
  if (ah.dim == 0) {
    out.vertices = {pts.front()};
    return out;
  }

  const AffineChart chart = chart_of(out);
  const std::size_t d = chart.local_dim();
  // Point y gives the constraint b - a·y >= 0 on candidate facets (b, a).
  std::vector<std::vector<Integer>> cons;
  cons.reserve(pts.size());
  for (const auto& p : pts) {
    RationalPoint y = chart.to_local(p);
    std::vector<Rational> row;
    row.reserve(d + 1);
    row.emplace_back(1);
    for (const auto& c : y.coords) row.emplace_back(-c);
    cons.push_back(clear_denominators(row));
  }

  std::vector<std::size_t> basis;
  RatMatrix rows;
  for (std::size_t i = 0; i < pts.size() && basis.size() < d + 1; ++i) {
    RatMatrix trial = rows;
    trial.emplace_back(cons[i].begin(), cons[i].end());
    if (detail::rank(trial) == trial.size()) {
      rows = std::move(trial);
      basis.push_back(i);
    }
  }
  std::vector<std::vector<Integer>> start;
  for (auto i : basis) start.push_back(cons[i]);
  detail::Cone cone = detail::Cone::simplicial(start, basis, pts.size());
  std::vector<bool> in_basis(pts.size(), false);
  for (auto i : basis) in_basis[i] = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!in_basis[i]) cone.intersect(cons[i], i);

  const auto& rays = cone.rays();
  for (const auto& r : rays) {
    std::vector<Integer> normal(n, Integer(0));
    for (std::size_t j = 0; j < d; ++j) normal[chart.free_coords()[j]] = r.v[j + 1];
    out.facets.push_back(Inequality::make(std::move(normal), r.v[0]));
  }
  std::sort(out.facets.begin(), out.facets.end());

  // A point is a vertex iff no other point is tight on a superset of its
  // tight facets.
  std::vector<detail::Bits> tight(pts.size(), detail::Bits(rays.size()));
  for (std::size_t f = 0; f < rays.size(); ++f)
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (rays[f].zeros.test(i)) tight[i].set(f);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool vertex = true;
    for (std::size_t j = 0; j < pts.size() && vertex; ++j)
      if (j != i && tight[i].is_subset_of(tight[j])) vertex = false;
    if (vertex) out.vertices.push_back(pts[i]);
  }
  return out;
}

bool contains(const DualDescription& p, const RationalPoint& x, ContainMode mode) {
  if (x.ambient_dim() != p.ambient_dim)
    throw Error("dimension mismatch: point in Q^" +
                std::to_string(x.ambient_dim()) + ", polytope in Q^" +
                std::to_string(p.ambient_dim));
  for (const auto& h : p.equalities)
    if (sgn(h.eval(x)) != 0) return false;
  for (const auto& f : p.facets) {
    int s = sgn(f.slack(x));
    if (s < 0 || (s == 0 && mode == ContainMode::RelativeInterior)) return false;
  }
  return true;
}

std::vector<ArrangementCell> arrangement_cells(
    std::span<const Hyperplane> hyperplanes, const DualDescription& within) {
  if (within.vertices.empty()) throw Error("unbounded or empty region");
  for (const auto& h : hyperplanes)
    if (h.normal.size() != within.ambient_dim) throw Error("dimension mismatch");
  const AffineChart chart = chart_of(within);
  const std::size_t k = chart.local_dim();

  std::vector<Integer> lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational mn = within.vertices.front()[chart.free_coords()[j]], mx = mn;
    for (const auto& v : within.vertices) {
      const Rational& c = v[chart.free_coords()[j]];
      if (c < mn) mn = c;
      if (c > mx) mx = c;
    }
    Integer f, cl;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(cl.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[j] = f - 1;
    hi[j] = cl + 1;
  }

  std::vector<detail::Cell> cells{detail::Cell::box(lo, hi)};
  for (const auto& f : within.facets) {
    auto c = detail::homogenize(chart.restrict(f.normal, f.offset));
    std::vector<detail::Cell> next;
    for (const auto& cell : cells) {
      auto pieces = cell.split(c);
      switch (pieces.side) {
        case detail::Side::Positive:
        case detail::Side::Zero:
          next.push_back(cell);
          break;
        case detail::Side::Negative:
          break;
        case detail::Side::Cut:
          next.push_back(std::move(*pieces.zero));
          next.push_back(std::move(*pieces.positive));
          break;
      }
    }
    cells = std::move(next);
  }

  std::vector<Inequality> cuts;
  for (const auto& h : hyperplanes) {
    Inequality r = chart.restrict(h.normal, h.offset);
    auto lead = std::find_if(r.normal.begin(), r.normal.end(),
                             [](const Integer& x) { return sgn(x) != 0; });
    if (lead == r.normal.end()) continue;
    if (sgn(*lead) < 0) {
      for (auto& x : r.normal) x = -x;
      r.offset = -r.offset;
    }
    cuts.push_back(std::move(r));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (const auto& cut : cuts) {
    auto c = detail::homogenize(cut);
    std::vector<detail::Cell> next;
    for (const auto& cell : cells) {
      auto pieces = cell.split(c);
      if (pieces.side != detail::Side::Cut) {
        next.push_back(cell);
        continue;
      }
      next.push_back(std::move(*pieces.negative));
      next.push_back(std::move(*pieces.zero));
      next.push_back(std::move(*pieces.positive));
    }
    cells = std::move(next);
  }

  std::vector<ArrangementCell> out;
  out.reserve(cells.size());
  for (const auto& cell : cells)
    out.push_back({chart.lift(cell.sample()), cell.dim()});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sample < b.sample; });
  return out;
}

std::vector<RationalPoint> arrangement_sample_points(
    std::span<const Hyperplane> hyperplanes, const DualDescription& within) {
  std::vector<RationalPoint> out;
  for (auto& c : arrangement_cells(hyperplanes, within)) out.push_back(std::move(c.sample));
  return out;
}

}  // namespace latcayley
