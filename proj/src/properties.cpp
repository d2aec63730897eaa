// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "latcayley/properties.hpp"

#include "int_system.hpp"

namespace latcayley {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::VerifiedUpToHorizon:
      return "verified_up_to_horizon";
  }
  return "unknown";
}

namespace {

// First x in `targets` (lexicographic order) with x - g outside s*P for every
// g in `gens`.
std::optional<std::size_t> first_undecomposed(const PointSet& targets,
                                              const PointSet& gens,
                                              const LatticePolytope& p, long s) {
  const detail::ScaledMembership member(p.desc(), s, ContainMode::Closed);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < gens.size() && !found; ++j)
      found = member.contains_difference(targets[i], gens[j]);
    if (!found) return i;
  }
  return std::nullopt;
}

}  // namespace

PropertyReport is_idp(const LatticePolytope& p, std::optional<long> max_degree) {
  PropertyReport r;
  r.property = "idp";
  const long by_dim = std::max(2, p.dim() - 1);
  const long top = max_degree.value_or(by_dim);
  if (top < 1) throw Error("max degree must be at least 1");
  r.degrees_checked = {2, top};
  if (top < by_dim)
    r.notes.push_back("degrees above " + std::to_string(top) +
                      " not checked; a full certificate needs degree " +
                      std::to_string(by_dim));
  const PointSet base = lattice_points(p);
  for (long n = 2; n <= top; ++n) {
    const PointSet pts = lattice_points(dilate(p, n));
    if (auto bad = first_undecomposed(pts, base, p, n - 1)) {
      r.verdict = Verdict::Fails;
      r.witness = Witness{n, pts.rational(*bad), {}};
      r.degrees_checked = {2, n};
      return r;
    }
  }
  r.verdict = Verdict::Holds;
  return r;
}

PropertyReport is_tuple_idp(std::span<const LatticePolytope> ps) {
  PropertyReport r;
  r.property = "tuple-idp";
  if (ps.empty()) throw Error("tuple-IDP of an empty tuple");
  const std::size_t m = ps.size();
  if (m > 20) throw Error("tuple-IDP supports at most 20 polytopes");
  for (const auto& q : ps)
    if (q.ambient_dim() != ps.front().ambient_dim())
      throw Error("dimension mismatch in tuple");
  std::vector<PointSet> pts;
  for (const auto& q : ps) pts.push_back(lattice_points(q));
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    std::vector<LatticePolytope> sub;
    std::vector<std::size_t> idx;
    std::optional<PointSet> sum;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      sub.push_back(ps[i]);
      idx.push_back(i + 1);
      sum = sum ? point_set_sum(*sum, pts[i]) : pts[i];
    }
    const PointSet lhs = lattice_points(minkowski_sum(sub));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (sum->contains(lhs[i])) continue;
      r.verdict = Verdict::Fails;
      r.witness = Witness{std::nullopt, lhs.rational(i), idx};
      return r;
    }
  }
  r.verdict = Verdict::Holds;
  return r;
}

LevelData level_index(const LatticePolytope& p) {
  for (long t = 1; t <= p.dim() + 1; ++t) {
    PointSet g = interior_lattice_points(dilate(p, t));
    if (!g.empty()) return {t, std::move(g)};
  }
  throw Error("no interior lattice point up to dilation dim + 1");
}

PropertyReport level_status(const LatticePolytope& p, std::optional<long> horizon) {
  PropertyReport r;
  r.property = "level";
  const LevelData lv = level_index(p);
  const long h = horizon.value_or(lv.index_r + p.dim() + 2);
  r.index = lv.index_r;
  r.horizon_used = h;
  r.degrees_checked = {lv.index_r, std::max(h, lv.index_r)};
  for (long n = lv.index_r + 1; n <= h; ++n) {
    const PointSet pts = interior_lattice_points(dilate(p, n));
    if (auto bad = first_undecomposed(pts, lv.interior_generators, p, n - lv.index_r)) {
      r.verdict = Verdict::Fails;
      r.witness = Witness{n, pts.rational(*bad), {}};
      r.degrees_checked = {lv.index_r, n};
      return r;
    }
  }
  r.verdict = Verdict::VerifiedUpToHorizon;
  // For a simplex, every interior point of the cone over it is an interior
  // point of degree <= dim + 1 plus vertices, so these degrees decide it.
  if (p.vertices().size() == static_cast<std::size_t>(p.dim()) + 1 && h >= p.dim() + 1)
    r.notes.push_back("simplex checked through degree dim + 1: conclusive, it is level");
  return r;
}

PropertyReport is_gorenstein(const LatticePolytope& p, std::optional<long> horizon) {
  PropertyReport r = level_status(p, horizon);
  r.property = "gorenstein";
  if (r.verdict == Verdict::Fails) {
    r.notes.push_back("not level");
    return r;
  }
  const LevelData lv = level_index(p);
  if (lv.interior_generators.size() != 1) {
    r.verdict = Verdict::Fails;
    r.witness = Witness{lv.index_r, lv.interior_generators.rational(1), {}};
    r.notes.push_back(std::to_string(lv.interior_generators.size()) +
                      " interior lattice points at the level index");
  }
  return r;
}

bool edge_length_criterion(const LatticePolytope& p) {
  if (p.dim() < 1) throw Error("edge-length criterion needs dimension >= 1");
  const long d = p.dim();
  const Integer need = 2 * d * (d + 1);
  for (const auto& e : edges(p))
    if (e.lattice_length < need) return false;
  return true;
}

PropertyReport coverage_report(const std::string& property, const CoverageResult& c) {
  PropertyReport r;
  r.property = property;
  r.verdict = c.covered ? Verdict::Holds : Verdict::Fails;
  if (c.witness) r.witness = Witness{std::nullopt, *c.witness, {}};
  r.notes.push_back("arrangement cells examined: " + std::to_string(c.cells));
  return r;
}

}  // namespace latcayley
