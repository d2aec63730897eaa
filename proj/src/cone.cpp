// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cone.hpp"

#include "linalg.hpp"

namespace latcayley::detail {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

namespace {

// Rays created by combining adjacent pairs (p, q) with s[p] > 0 > s[q]. The
// adjacency test is combinatorial: no third ray may be tight on every
// constraint tight on both p and q.
std::vector<Ray> combine_adjacent(const std::vector<Ray>& rays,
                                  const std::vector<Integer>& s,
                                  const std::vector<std::size_t>& pos,
                                  const std::vector<std::size_t>& neg,
                                  int cone_dim) {
  std::vector<Ray> out;
  const std::size_t min_common = cone_dim >= 2 ? std::size_t(cone_dim - 2) : 0;
  for (std::size_t p : pos) {
    for (std::size_t q : neg) {
      Bits common = rays[p].zeros & rays[q].zeros;
      if (common.count() < min_common) continue;
      bool adjacent = true;
      for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
        if (r == p || r == q) continue;
        if (common.is_subset_of(rays[r].zeros)) adjacent = false;
      }
      if (!adjacent) continue;
      Ray w;
      w.v.resize(rays[p].v.size());
      for (std::size_t i = 0; i < w.v.size(); ++i)
        w.v[i] = s[p] * rays[q].v[i] - s[q] * rays[p].v[i];
      make_primitive(w.v);
      w.zeros = std::move(common);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

Cone Cone::simplicial(const std::vector<std::vector<Integer>>& rows,
                      std::span<const std::size_t> ids, std::size_t capacity) {
  const std::size_t n = rows.size();
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  RatMatrix inv = inverse(m);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = inv[i][j];
    Ray r;
    r.v = clear_denominators(col);
    make_primitive(r.v);
    r.zeros.resize(capacity);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) r.zeros.set(ids[i]);
    rays.push_back(std::move(r));
  }
  return Cone(static_cast<int>(n), capacity, std::move(rays));
}

void Cone::intersect(std::span<const Integer> c, std::size_t id) {
  std::vector<Integer> s(rays_.size());
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    s[i] = dot(c, rays_[i].v);
    int sg = sgn(s[i]);
    if (sg > 0) pos.push_back(i);
    else if (sg < 0) neg.push_back(i);
  }
  if (neg.empty()) {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (sgn(s[i]) == 0) rays_[i].zeros.set(id);
    return;
  }
  std::vector<Ray> fresh = combine_adjacent(rays_, s, pos, neg, cone_dim_);
  std::vector<Ray> kept;
  kept.reserve(rays_.size() + fresh.size());
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    int sg = sgn(s[i]);
    if (sg < 0) continue;
    if (sg == 0) rays_[i].zeros.set(id);
    kept.push_back(std::move(rays_[i]));
  }
  for (auto& r : fresh) {
    r.zeros.set(id);
    kept.push_back(std::move(r));
  }
  rays_ = std::move(kept);
}

Side Cone::classify(std::span<const Integer> c) const {
  bool any_pos = false, any_neg = false;
  for (const auto& r : rays_) {
    int sg = sgn(dot(c, r.v));
    if (sg > 0) any_pos = true;
    else if (sg < 0) any_neg = true;
    if (any_pos && any_neg) return Side::Cut;
  }
  if (any_pos) return Side::Positive;
  if (any_neg) return Side::Negative;
  return Side::Zero;
}

Cone::Split Cone::split(std::span<const Integer> c) const {
  Split out;
  std::vector<Integer> s(rays_.size());
  std::vector<std::size_t> pos, neg, zero;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    s[i] = dot(c, rays_[i].v);
    int sg = sgn(s[i]);
    if (sg > 0) pos.push_back(i);
    else if (sg < 0) neg.push_back(i);
    else zero.push_back(i);
  }
  if (pos.empty() || neg.empty()) {
    out.side = !pos.empty() ? Side::Positive
             : !neg.empty() ? Side::Negative
                            : Side::Zero;
    return out;
  }
  out.side = Side::Cut;
  std::vector<Ray> fresh = combine_adjacent(rays_, s, pos, neg, cone_dim_);
  const std::size_t bit = num_constraints_;
  auto extend = [&](const Ray& r, bool tight) {
    Ray e;
    e.v = r.v;
    e.zeros = r.zeros;
    e.zeros.push_back(tight);
    return e;
  };
  std::vector<Ray> zr;
  for (std::size_t i : zero) zr.push_back(extend(rays_[i], true));
  for (const auto& r : fresh) zr.push_back(extend(r, true));

  std::vector<Ray> nr, pr;
  for (std::size_t i : neg) nr.push_back(extend(rays_[i], false));
  for (std::size_t i : pos) pr.push_back(extend(rays_[i], false));
  for (const auto& r : zr) {
    nr.push_back(r);
    pr.push_back(r);
  }
  out.negative.emplace(cone_dim_, bit + 1, std::move(nr));
  out.positive.emplace(cone_dim_, bit + 1, std::move(pr));
  out.zero.emplace(cone_dim_ - 1, bit + 1, std::move(zr));
  return out;
}

}  // namespace latcayley::detail
