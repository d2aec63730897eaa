// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "latcayley/covering.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cells.hpp"
#include "int_system.hpp"

namespace latcayley {
namespace {

using detail::Cell;
using detail::Side;

void validate(const CoverageQuery& q) {
  const std::size_t n = q.target.ambient_dim();
  if (q.translate_base.ambient_dim() != n || q.translations.ambient_dim() != n)
    throw Error("coverage query: ambient dimensions differ");
  if (q.translations.empty()) throw Error("coverage query: no translations");
}

enum class Kind { LessEqual, Less, Equal };

struct Constraint {
  Kind kind;
  std::vector<Integer> c;  // homogenized, feasible side c >= 0
};

// Constraints of t + base (or its relative interior) in target-chart coordinates.
std::vector<Constraint> translate_constraints(const CoverageQuery& q,
                                              const AffineChart& chart,
                                              std::span<const std::int64_t> t) {
  std::vector<Constraint> out;
  auto shifted = [&](const std::vector<Integer>& a, const Integer& b) {
    Integer off = b;
    for (std::size_t j = 0; j < a.size(); ++j) off += a[j] * t[j];
    return detail::homogenize(chart.restrict(a, off));
  };
  for (const auto& h : q.translate_base.desc().equalities)
    out.push_back({Kind::Equal, shifted(h.normal, h.offset)});
  const Kind k = q.mode == ContainMode::Closed ? Kind::LessEqual : Kind::Less;
  for (const auto& f : q.translate_base.desc().facets)
    out.push_back({k, shifted(f.normal, f.offset)});
  return out;
}

enum class Status { Inside, Outside, Unknown };

Status status(Kind k, Side s) {
  if (s == Side::Cut) return Status::Unknown;
  switch (k) {
    case Kind::LessEqual:
      return s == Side::Negative ? Status::Outside : Status::Inside;
    case Kind::Less:
      return s == Side::Positive ? Status::Inside : Status::Outside;
    case Kind::Equal:
      return s == Side::Zero ? Status::Inside : Status::Outside;
  }
  return Status::Unknown;
}

struct Region {
  AffineChart chart;
  std::vector<Cell> cells;
};

Region target_region(const CoverageQuery& q, detail::CellBudget& budget) {
  const DualDescription& d = q.target.desc();
  Region r{chart_of(d), {}};
  const std::size_t k = r.chart.local_dim();
  std::vector<Integer> lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t c = r.chart.free_coords()[j];
    Rational mn = d.vertices.front()[c], mx = mn;
    for (const auto& v : d.vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[j] = mn.get_num() - 1;  // lattice vertices: integral already
    hi[j] = mx.get_num() + 1;
  }
  r.cells.push_back(Cell::box(lo, hi));
  const bool closed = q.mode == ContainMode::Closed;
  for (const auto& f : d.facets) {
    auto c = detail::homogenize(r.chart.restrict(f.normal, f.offset));
    std::vector<Cell> next;
    for (const auto& cell : r.cells) {
      auto p = cell.split(c);
      budget.charge(p.side == Side::Cut ? 3 : 0);
      switch (p.side) {
        case Side::Positive:
          next.push_back(cell);
          break;
        case Side::Zero:
          if (closed) next.push_back(cell);
          break;
        case Side::Negative:
          break;
        case Side::Cut:
          if (closed) next.push_back(std::move(*p.zero));
          next.push_back(std::move(*p.positive));
          break;
      }
    }
    r.cells = std::move(next);
  }
  return r;
}

// Every hyperplane that can bound a cell: target facets and translate facets
// and equalities, restricted to the chart.
std::vector<std::vector<Integer>> all_cuts(const CoverageQuery& q,
                                           const AffineChart& chart) {
  std::vector<std::vector<Integer>> cuts;
  for (const auto& f : q.target.desc().facets)
    cuts.push_back(detail::homogenize(chart.restrict(f.normal, f.offset)));
  for (std::size_t i = 0; i < q.translations.size(); ++i)
    for (auto& c : translate_constraints(q, chart, q.translations[i]))
      cuts.push_back(std::move(c.c));
  for (auto& c : cuts) {
    auto lead = std::find_if(c.begin() + 1, c.end(),
                             [](const Integer& x) { return sgn(x) != 0; });
    if (lead != c.end() && sgn(*lead) < 0)
      for (auto& x : c) x = -x;
  }
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [](const auto& c) {
                              return std::all_of(c.begin() + 1, c.end(), [](const Integer& x) {
                                return sgn(x) == 0;
                              });
                            }),
             cuts.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Splits the uncovered cells into arrangement cells and picks the witness.
RationalPoint pick_witness(const CoverageQuery& q, const AffineChart& chart,
                           std::vector<Cell> cells, detail::CellBudget& budget) {
  for (const auto& c : all_cuts(q, chart)) {
    std::vector<Cell> next;
    for (auto& cell : cells) {
      auto p = cell.split(c);
      if (p.side != Side::Cut) {
        next.push_back(std::move(cell));
        continue;
      }
      budget.charge(3);
      next.push_back(std::move(*p.negative));
      next.push_back(std::move(*p.zero));
      next.push_back(std::move(*p.positive));
    }
    cells = std::move(next);
  }
  std::optional<ArrangementCell> best;
  for (const auto& cell : cells) {
    ArrangementCell a{chart.lift(cell.sample()), cell.dim()};
    if (!best || detail::witness_less(a, *best)) best = std::move(a);
  }
  return best->sample;
}

// Lattice points make the most useful witnesses, so an uncovered one wins.
std::optional<RationalPoint> lattice_witness(const CoverageQuery& q) {
  const DualDescription& d = q.target.desc();
  std::vector<Integer> lo, hi;
  detail::bounding_box(d, lo, hi);
  const PointSet pts = detail::enumerate_lattice_points(d.ambient_dim, d.equalities,
                                                        d.facets, lo, hi, q.mode);
  const detail::ScaledMembership base(q.translate_base.desc(), 1, q.mode);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < q.translations.size() && !hit; ++j)
      hit = base.contains_difference(pts[i], q.translations[j]);
    if (!hit) return pts.rational(i);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t default_cell_budget() {
  if (const char* env = std::getenv("LATCAYLEY_CELL_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(std::string("LATCAYLEY_CELL_BUDGET must be a positive integer, got '") +
                env + "'");
  }
  return 1000000;
}

CoverageResult covers(const CoverageQuery& q) { return covers(q, default_cell_budget()); }

CoverageResult covers(const CoverageQuery& q, std::uint64_t limit) {
  validate(q);
  detail::CellBudget budget(limit);
  Region region = target_region(q, budget);
  const AffineChart& chart = region.chart;

  std::vector<std::vector<Constraint>> translates;
  translates.reserve(q.translations.size());
  for (std::size_t i = 0; i < q.translations.size(); ++i)
    translates.push_back(translate_constraints(q, chart, q.translations[i]));

  std::vector<Cell> uncovered;
  std::vector<std::pair<Cell, std::size_t>> stack;
  for (auto& c : region.cells) stack.emplace_back(std::move(c), 0);
  while (!stack.empty()) {
    auto [cell, i] = std::move(stack.back());
    stack.pop_back();
    bool done = false;
    for (; i < translates.size() && !done; ++i) {
      const Constraint* cut = nullptr;
      bool outside = false;
      for (const auto& con : translates[i]) {
        const Side s = cell.classify(con.c);
        const Status st = status(con.kind, s);
        if (st == Status::Outside) {
          outside = true;
          break;
        }
        if (st == Status::Unknown && !cut) cut = &con;
      }
      if (outside) continue;
      if (!cut) {
        done = true;  // inside translate i
        break;
      }
      auto p = cell.split(cut->c);
      budget.charge(3);
      stack.emplace_back(std::move(*p.positive), i);
      stack.emplace_back(std::move(*p.zero), i);
      stack.emplace_back(std::move(*p.negative), i);
      done = true;
    }
    if (!done) uncovered.push_back(std::move(cell));
  }

  CoverageResult r;
  r.covered = uncovered.empty();
  if (!r.covered) {
    r.witness = lattice_witness(q);
    if (!r.witness) r.witness = pick_witness(q, chart, std::move(uncovered), budget);
  }
  r.cells = budget.used();
  return r;
}

bool covered_point(const CoverageQuery& q, const RationalPoint& x) {
  for (std::size_t i = 0; i < q.translations.size(); ++i) {
    const RationalPoint y = x - q.translations.rational(i);
    if (contains(q.translate_base.desc(), y, q.mode)) return true;
  }
  return false;
}

CoverageResult covers_by_sampling(const CoverageQuery& q) {
  validate(q);
  std::vector<Hyperplane> hyps;
  for (const auto& f : q.target.desc().facets) hyps.push_back(Hyperplane::make(f.normal, f.offset));
  for (std::size_t i = 0; i < q.translations.size(); ++i) {
    auto t = q.translations[i];
    auto shifted = [&](const std::vector<Integer>& a, const Integer& b) {
      Integer off = b;
      for (std::size_t j = 0; j < a.size(); ++j) off += a[j] * t[j];
      return Hyperplane::make(a, off);
    };
    for (const auto& h : q.translate_base.desc().equalities)
      hyps.push_back(shifted(h.normal, h.offset));
    for (const auto& f : q.translate_base.desc().facets)
      hyps.push_back(shifted(f.normal, f.offset));
  }
  CoverageResult r;
  std::optional<ArrangementCell> best;
  const auto cells = arrangement_cells(hyps, q.target.desc());
  r.cells = cells.size();
  for (const auto& cell : cells) {
    if (!contains(q.target.desc(), cell.sample, q.mode)) continue;
    if (covered_point(q, cell.sample)) continue;
    if (!best || detail::witness_less(cell, *best)) best = cell;
  }
  r.covered = !best;
  if (best) {
    r.witness = lattice_witness(q);
    if (!r.witness) r.witness = best->sample;
  }
  return r;
}

CoverageResult is_2_convex_normal(const LatticePolytope& p) {
  return covers({dilate(p, 2), p, lattice_points(p), ContainMode::Closed});
}

CoverageResult satisfies_condition_01(const LatticePolytope& p) {
  return covers({dilate(p, 2), p, lattice_points(p), ContainMode::RelativeInterior});
}

}  // namespace latcayley
