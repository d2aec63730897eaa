// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cells.hpp"

namespace latcayley::detail {

std::vector<Integer> homogenize(const Inequality& ineq) {
  std::vector<Integer> c;
  c.reserve(ineq.normal.size() + 1);
  c.push_back(ineq.offset);
  for (const auto& a : ineq.normal) c.push_back(-a);
  return c;
}

void CellBudget::charge(std::uint64_t n) {
  used_ += n;
  if (used_ > limit_)
    throw Error("arrangement exceeds the cell budget of " +
                std::to_string(limit_) +
                " (raise it with LATCAYLEY_CELL_BUDGET)");
}

Cell Cell::box(std::span<const Integer> lo, std::span<const Integer> hi) {
  const std::size_t k = lo.size();
  const std::size_t corners = std::size_t(1) << k;
  std::vector<Ray> rays;
  rays.reserve(corners);
  for (std::size_t mask = 0; mask < corners; ++mask) {
    Ray r;
    r.v.resize(k + 1);
    r.v[0] = 1;
    r.zeros.resize(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      const bool upper = (mask >> i) & 1;
      r.v[i + 1] = upper ? hi[i] : lo[i];
      r.zeros.set(2 * i + (upper ? 0 : 1));
    }
    rays.push_back(std::move(r));
  }
  return Cell(Cone(static_cast<int>(k) + 1, 2 * k, std::move(rays)));
}

std::size_t Cell::local_dim() const {
  return cone_.rays().empty() ? 0 : cone_.rays().front().v.size() - 1;
}

Cell::Pieces Cell::split(std::span<const Integer> c) const {
  Cone::Split s = cone_.split(c);
  Pieces p;
  p.side = s.side;
  if (s.negative) p.negative = Cell(std::move(*s.negative));
  if (s.zero) p.zero = Cell(std::move(*s.zero));
  if (s.positive) p.positive = Cell(std::move(*s.positive));
  return p;
}

std::vector<RationalPoint> Cell::vertices() const {
  std::vector<RationalPoint> out;
  out.reserve(cone_.rays().size());
  for (const auto& r : cone_.rays()) {
    RationalPoint p;
    p.coords.reserve(r.v.size() - 1);
    for (std::size_t i = 1; i < r.v.size(); ++i)
      p.coords.emplace_back(Rational(r.v[i], r.v[0]));
    for (auto& q : p.coords) q.canonicalize();
    out.push_back(std::move(p));
  }
  return out;
}

RationalPoint Cell::sample() const {
  auto vs = vertices();
  RationalPoint s = RationalPoint::zeros(local_dim());
  for (const auto& v : vs) s = s + v;
  return Rational(1, static_cast<long>(vs.size())) * s;
}

bool witness_less(const ArrangementCell& a, const ArrangementCell& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.sample < b.sample;
}

}  // namespace latcayley::detail
