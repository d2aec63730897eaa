// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>

#include "latcayley/harness.hpp"

namespace latcayley {

using nlohmann::json;

namespace {

LatticePolytope segment(LatticePoint a, LatticePoint b) {
  return LatticePolytope::from_vertices(std::vector<LatticePoint>{std::move(a), std::move(b)});
}

Check check(std::string name, bool passed, json detail = nullptr) {
  return {std::move(name), passed, std::move(detail)};
}

json witness_detail(const PropertyReport& r, bool rechecked) {
  json d = report_json(r, json::object());
  d.erase("config");
  d.erase("version");
  d["witness_rechecked"] = rechecked;
  return d;
}

CampaignReport example_2_4(long n1, long n2) {
  CampaignReport rep;
  rep.id = "example_2_4";
  rep.config = {{"example", "example_2_4"}, {"n1", n1}, {"n2", n2}};
  const std::vector<LatticePolytope> ps{dilate(segment({0, 0}, {1, 2}), n1),
                                        dilate(segment({0, 0}, {1, 0}), n2)};
  const LatticePoint x{1, 1};
  rep.checks.push_back(check("(1,1) lies in (n1 P1 + n2 P2) ∩ Z^2",
                             lattice_points(minkowski_sum(ps)).contains(x)));
  rep.checks.push_back(check(
      "(1,1) is not in (n1 P1 ∩ Z^2) + (n2 P2 ∩ Z^2)",
      !point_set_sum(lattice_points(ps[0]), lattice_points(ps[1])).contains(x)));
  const PropertyReport t = is_tuple_idp(ps);
  const bool t_ok = t.verdict == Verdict::Fails && recheck_witness(t, ps);
  rep.checks.push_back(check("tuple (n1 P1, n2 P2) is not IDP", t_ok, witness_detail(t, t_ok)));
  const LatticePolytope cay = cayley_sum(ps);
  const PropertyReport c = is_idp(cay);
  const bool c_ok = c.verdict == Verdict::Fails && recheck_witness(c, {cay});
  rep.checks.push_back(check("Cayley sum n1 P1 * n2 P2 is not IDP", c_ok, witness_detail(c, c_ok)));
  return rep;
}

CampaignReport example_1_9(long h, long n, std::optional<long> horizon) {
  CampaignReport rep;
  rep.id = "example_1_9";
  rep.config = {{"example", "example_1_9"}, {"h", h}, {"n", n},
                {"horizon", horizon ? json(*horizon) : json(nullptr)}};
  const std::vector<LatticePolytope> ps{segment({1, 0}, {0, 1}), segment({1, 1}, {-h, -n * h})};
  const LatticePolytope mink = minkowski_sum(ps);
  const PropertyReport m = level_status(mink, horizon);
  rep.checks.push_back(check("P1 + P2 is level of index 1 (verified to horizon)",
                             m.verdict == Verdict::VerifiedUpToHorizon && m.index == 1,
                             witness_detail(m, false)));

  const LatticePolytope cay = cayley_sum(ps);
  const long start = horizon.value_or(level_index(cay).index_r + cay.dim() + 2);
  const long limit = std::max(start, 4 * start);
  PropertyReport c;
  for (long hz = start;; hz = std::min(2 * hz, limit)) {
    c = level_status(cay, hz);
    if (c.verdict == Verdict::Fails || hz == limit) break;
  }
  const bool found = c.verdict == Verdict::Fails;
  const bool rechecked = found && recheck_witness(c, {cay});
  if (!found && c.notes.empty())
    rep.notes.push_back("no level violation of the Cayley sum up to degree " +
                        std::to_string(*c.horizon_used) + "; not asserting levelness");
  else if (!found)
    rep.notes.push_back("the Cayley sum is a simplex with no violation through degree " +
                        std::to_string(*c.horizon_used) + ", so it is level for these parameters");
  rep.checks.push_back(check("P1 * P2 is not level (explicit witness)", rechecked,
                             witness_detail(c, rechecked)));
  return rep;
}

// ---- campaigns ------------------------------------------------------------

// Per-dimension coordinate caps that keep a campaign at desk scale.
struct Caps {
  long by_dim[5];
  long bound(int d, long configured) const {
    return std::min(configured, by_dim[std::clamp(d, 0, 4)]);
  }
  std::string describe() const {
    std::string s = "per-dimension coordinate caps (dim:cap)";
    for (int d = 1; d <= 4; ++d)
      s += " " + std::to_string(d) + ":" + std::to_string(by_dim[d]);
    return s;
  }
};

constexpr Caps kNoCaps{{1000000, 1000000, 1000000, 1000000, 1000000}};
constexpr Caps kMediumCaps{{4, 4, 3, 2, 1}};
constexpr Caps kHeavyCaps{{3, 3, 2, 1, 1}};
constexpr Caps kTinyCaps{{1, 3, 2, 1, 1}};

struct Ctx {
  const CampaignConfig& cfg;
  Rng& rng;
  CampaignReport& rep;
  Caps caps;

  LatticePolytope polytope(std::size_t ambient, int d) {
    const long b = caps.bound(d, cfg.coord_bound);
    const std::size_t pts = static_cast<std::size_t>(d) + 1 + rng.uniform(0, 2);
    return random_lattice_polytope(rng, ambient, d, b, pts);
  }
  std::size_t ambient() { return static_cast<std::size_t>(rng.uniform(1, cfg.dim_max)); }
  int dim_in(std::size_t ambient, int lo = 1) {
    return static_cast<int>(rng.uniform(lo, static_cast<long>(ambient)));
  }
  // m summands; three only when the ambient space is small.
  std::size_t summands(std::size_t ambient, std::size_t lo = 2) {
    const long hi = ambient >= 3 ? 2 : 3;
    return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), std::max<long>(hi, lo)));
  }
  void tally(const std::string& k) { ++rep.tallies[k]; }
};

struct Outcome {
  std::vector<LatticePolytope> inputs;
  std::optional<PropertyReport> violation;
};

PropertyReport violation(const std::string& what, std::optional<PropertyReport> base = {}) {
  PropertyReport r = base.value_or(PropertyReport{});
  if (!base) {
    r.property = "campaign";
    r.verdict = Verdict::Fails;
  }
  r.notes.insert(r.notes.begin(), what);
  return r;
}

bool level_with_index(const PropertyReport& r, long index) {
  return r.verdict == Verdict::VerifiedUpToHorizon && r.index == index;
}

std::string heights(std::span<const long> a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// Every a in Z_{>=lo}^m with sum at most total.
std::vector<std::vector<long>> height_vectors(std::size_t m, long lo, long total) {
  std::vector<std::vector<long>> out;
  std::vector<long> a(m, lo);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == m) {
      out.push_back(a);
      return;
    }
    for (long v = lo; v <= left; ++v) {
      a[i] = v;
      rec(i + 1, left - (v - lo));
    }
  };
  const long spare = total - lo * static_cast<long>(m);
  if (spare >= 0) rec(0, spare + lo);
  return out;
}

std::optional<PropertyReport> slice_lemma(Ctx& c, const std::vector<LatticePolytope>& ps,
                                          bool interior) {
  const std::size_t m = ps.size();
  for (const auto& a : height_vectors(m, interior ? 1 : 0, c.cfg.height_total)) {
    c.tally("height_vectors");
    const PointSet slice =
        cayley_slice(ps, a, interior ? ContainMode::RelativeInterior : ContainMode::Closed);
    std::vector<std::int64_t> flat;
    const std::size_t n = ps.front().ambient_dim();
    for (std::size_t i = 0; i < slice.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(slice[i][m + j]);
    const PointSet proj = PointSet::from_flat(n, std::move(flat));
    std::vector<LatticePolytope> scaled;
    for (std::size_t i = 0; i < m; ++i) scaled.push_back(dilate(ps[i], a[i]));
    const LatticePolytope sum = minkowski_sum(scaled);
    const PointSet direct = interior ? interior_lattice_points(sum) : lattice_points(sum);
    if (proj == direct) continue;
    PropertyReport r;
    r.property = interior ? "lemma_1_2" : "lemma_1_1";
    r.verdict = Verdict::Fails;
    for (std::size_t i = 0; i < std::max(proj.size(), direct.size()); ++i) {
      if (i < proj.size() && !direct.contains(proj[i])) {
        r.witness = Witness{std::nullopt, proj.rational(i), {}};
        break;
      }
      if (i < direct.size() && !proj.contains(direct[i])) {
        r.witness = Witness{std::nullopt, direct.rational(i), {}};
        break;
      }
    }
    r.notes.push_back("heights " + heights(a));
    return r;
  }
  return std::nullopt;
}

// Two summands whose sum is 2*[0,1]^n or (n+1)*simplex, so the sum has a
// single interior lattice point, all pushed through one random shear.
std::vector<LatticePolytope> split_reflexive(Ctx& c) {
  const auto n = static_cast<std::size_t>(c.rng.uniform(1, std::min(c.cfg.dim_max, 3)));
  std::vector<std::vector<LatticePoint>> parts(2);
  if (c.rng.coin()) {
    std::vector<long> len(n);
    for (auto& l : len) l = c.rng.uniform(0, 2);
    for (int k = 0; k < 2; ++k)
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        LatticePoint v(n);
        for (std::size_t i = 0; i < n; ++i)
          v[i] = ((mask >> i) & 1) ? (k == 0 ? len[i] : 2 - len[i]) : 0;
        parts[k].push_back(v);
      }
  } else {
    const long a = c.rng.uniform(1, static_cast<long>(n));
    for (int k = 0; k < 2; ++k) {
      const long s = k == 0 ? a : static_cast<long>(n) + 1 - a;
      parts[k].push_back(LatticePoint(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        LatticePoint v(n, 0);
        v[i] = s;
        parts[k].push_back(v);
      }
    }
  }
  // x_i += f * x_j for one random pair, applied to every vertex.
  const std::size_t i = static_cast<std::size_t>(c.rng.uniform(0, static_cast<long>(n) - 1));
  const std::size_t j = static_cast<std::size_t>(c.rng.uniform(0, static_cast<long>(n) - 1));
  const long f = i == j ? 0 : c.rng.uniform(-1, 1);
  std::vector<LatticePolytope> out;
  for (auto& vs : parts) {
    for (auto& v : vs) v[i] += f * v[j];
    out.push_back(LatticePolytope::from_vertices(vs));
  }
  return out;
}

using Campaign = std::function<Outcome(Ctx&)>;

struct CampaignDef {
  Caps caps;
  std::vector<std::string> notes;
  Campaign run;
};

Outcome tuple_of(Ctx& c, std::size_t lo_m, const std::function<LatticePolytope(int, LatticePolytope)>& shape,
                 int lo_dim = 1) {
  const std::size_t n = c.ambient();
  const std::size_t m = c.summands(n, lo_m);
  Outcome o;
  for (std::size_t i = 0; i < m; ++i) {
    const int d = c.dim_in(n, lo_dim);
    o.inputs.push_back(shape(d, c.polytope(n, d)));
  }
  return o;
}

const std::map<std::string, CampaignDef>& campaigns() {
  static const std::map<std::string, CampaignDef> table = [] {
    std::map<std::string, CampaignDef> t;

    t["thm_0_1_idp"] = {kMediumCaps, {"n ranges over {max(1, d-1), d}"}, [](Ctx& c) {
      const std::size_t n = c.ambient();
      const int d = c.dim_in(n);
      const long k = c.rng.uniform(std::max(1, d - 1), d);
      Outcome o{{dilate(c.polytope(n, d), k)}, {}};
      const PropertyReport r = is_idp(o.inputs[0]);
      if (r.verdict == Verdict::Fails)
        o.violation = violation("dilate by " + std::to_string(k) + " is not IDP", r);
      return o;
    }};

    t["thm_0_1_level"] = {kHeavyCaps, {"n ranges over {d+1, d+2}"}, [](Ctx& c) {
      const std::size_t n = c.ambient();
      const int d = c.dim_in(n);
      const long k = c.rng.uniform(d + 1, d + 2);
      Outcome o{{dilate(c.polytope(n, d), k)}, {}};
      const PropertyReport r = level_status(o.inputs[0], c.cfg.horizon);
      if (!level_with_index(r, 1))
        o.violation = violation("dilate by " + std::to_string(k) + " is not level of index 1", r);
      return o;
    }};

    t["lemma_1_1"] = {kMediumCaps,
                      {"lattice-point shadow of the real-set identity: integer heights a_i >= 0 with sum at most {H}"},
                      [](Ctx& c) {
                        Outcome o = tuple_of(c, 1, [](int, LatticePolytope p) { return p; }, 0);
                        o.violation = slice_lemma(c, o.inputs, false);
                        return o;
                      }};

    t["lemma_1_2"] = {kMediumCaps,
                      {"lattice-point shadow of the real-set identity: integer heights a_i >= 1 with sum at most {H}"},
                      [](Ctx& c) {
                        Outcome o = tuple_of(c, 1, [](int, LatticePolytope p) { return p; }, 0);
                        o.violation = slice_lemma(c, o.inputs, true);
                        return o;
                      }};

    t["thm_0_4_equiv"] = {kMediumCaps, {"dilation quantifier truncated to 0 <= a_i <= {A}"}, [](Ctx& c) {
      Outcome o = tuple_of(c, 2, [](int, LatticePolytope p) { return p; });
      const auto& ps = o.inputs;
      const std::size_t m = ps.size();
      const PropertyReport cay = is_idp(cayley_sum(ps));
      bool factors = true;
      for (const auto& p : ps) factors = factors && is_idp(p).verdict == Verdict::Holds;
      bool tuples = true;
      std::vector<std::vector<long>> box;
      std::vector<long> a(m, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
          box.push_back(a);
          return;
        }
        for (long v = 0; v <= c.cfg.dilation_bound; ++v) {
          a[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      std::optional<std::vector<long>> first_bad;
      for (const auto& av : box) {
        std::vector<LatticePolytope> scaled;
        for (std::size_t i = 0; i < m; ++i)
          if (av[i] > 0) scaled.push_back(dilate(ps[i], av[i]));
        if (scaled.size() < 2) continue;
        if (is_tuple_idp(scaled).verdict == Verdict::Fails) {
          tuples = false;
          first_bad = av;
          break;
        }
      }
      const bool cay_idp = cay.verdict == Verdict::Holds;
      c.tally(cay_idp ? "cayley_idp" : "cayley_not_idp");
      if (cay_idp != (factors && tuples)) {
        std::string why = std::string("Cayley IDP is ") + (cay_idp ? "true" : "false") +
                          " but factors IDP = " + (factors ? "true" : "false") +
                          " and boxed tuples IDP = " + (tuples ? "true" : "false");
        if (first_bad) why += " (first failing heights " + heights(*first_bad) + ")";
        o.violation = violation(why, cay);
        return o;
      }
      if (cay_idp) {
        for (const auto& av : box) {
          std::vector<LatticePolytope> scaled;
          for (std::size_t i = 0; i < m; ++i)
            if (av[i] > 0) scaled.push_back(dilate(ps[i], av[i]));
          if (scaled.empty()) continue;
          const PropertyReport r = is_idp(minkowski_sum(scaled));
          if (r.verdict == Verdict::Fails) {
            o.violation = violation("Minkowski sum at heights " + heights(av) + " is not IDP", r);
            return o;
          }
        }
      }
      return o;
    }};

    t["thm_0_4_level"] = {kTinyCaps, {"factors are dilates n_i in [1, d_i + 2]", "converse not asserted"}, [](Ctx& c) {
      Outcome o = tuple_of(c, 2, [&c](int d, LatticePolytope p) {
        return dilate(p, c.rng.uniform(1, d + 2));
      });
      const long m = static_cast<long>(o.inputs.size());
      const PropertyReport cay = level_status(cayley_sum(o.inputs), c.cfg.horizon);
      if (!level_with_index(cay, m)) {
        c.tally("hypothesis_not_met");
        return o;
      }
      c.tally("hypothesis_met");
      const PropertyReport mink = level_status(minkowski_sum(o.inputs), c.cfg.horizon);
      if (!level_with_index(mink, 1))
        o.violation = violation("Cayley sum level of index m but Minkowski sum is not level of index 1", mink);
      return o;
    }};

    auto two_cn_tuple = [](Ctx& c, bool by_dilation) {
      const std::size_t n = c.ambient();
      const std::size_t m = c.summands(n);
      Outcome o;
      for (std::size_t i = 0; i < m; ++i) {
        const int d = c.dim_in(n);
        LatticePolytope p = c.polytope(n, d);
        long k = by_dilation ? c.rng.uniform(std::max(1, d), d + 2) : c.rng.uniform(1, d + 1);
        LatticePolytope q = dilate(p, k);
        if (!by_dilation) {
          // Rejection sampling on the hypothesis, then a dilate by d as fallback.
          for (int tries = 0; tries < 5 && !is_2_convex_normal(q).covered; ++tries) {
            p = c.polytope(n, d);
            k = c.rng.uniform(1, d + 1);
            q = dilate(p, k);
          }
          if (!is_2_convex_normal(q).covered) q = dilate(p, std::max(1, d));
        }
        o.inputs.push_back(std::move(q));
      }
      for (const auto& q : o.inputs) {
        const CoverageResult cov = is_2_convex_normal(q);
        if (!cov.covered) {
          o.violation = violation("factor is not 2-convex-normal", coverage_report("2cn", cov));
          return o;
        }
      }
      const PropertyReport mink = is_idp(minkowski_sum(o.inputs));
      if (mink.verdict == Verdict::Fails) {
        o.violation = violation("Minkowski sum of 2-convex-normal factors is not IDP", mink);
        return o;
      }
      const PropertyReport cay = is_idp(cayley_sum(o.inputs));
      const PropertyReport tup = is_tuple_idp(o.inputs);
      const bool ci = cay.verdict == Verdict::Holds, ti = tup.verdict == Verdict::Holds;
      c.tally(ti ? "tuple_idp" : "tuple_not_idp");
      if (ci != ti)
        o.violation = violation(std::string("Cayley IDP = ") + (ci ? "true" : "false") +
                                    " but tuple IDP = " + (ti ? "true" : "false"),
                                ci ? tup : cay);
      return o;
    };

    t["thm_2_1"] = {kTinyCaps, {"factors: random dilates accepted by the 2-convex-normal decider"},
                    [two_cn_tuple](Ctx& c) { return two_cn_tuple(c, false); }};
    t["cor_2_3"] = {kTinyCaps, {"factors: dilates n_i in [d_i, d_i + 2]"},
                    [two_cn_tuple](Ctx& c) { return two_cn_tuple(c, true); }};

    t["lemma_2_2"] = {kTinyCaps, {"n ranges over [d, d + 2]"}, [](Ctx& c) {
      const std::size_t n = c.ambient();
      const int d = c.dim_in(n);
      const long k = c.rng.uniform(std::max(1, d), d + 2);
      Outcome o{{dilate(c.polytope(n, d), k)}, {}};
      const CoverageResult cov = is_2_convex_normal(o.inputs[0]);
      if (!cov.covered)
        o.violation = violation("dilate by " + std::to_string(k) + " is not 2-convex-normal",
                                coverage_report("2cn", cov));
      return o;
    }};

    t["prop_3_1"] = {kTinyCaps, {"inputs: random dilates accepted by the interior covering decider"}, [](Ctx& c) {
      const std::size_t n = c.ambient();
      const int d = c.dim_in(n);
      LatticePolytope p = c.polytope(n, d);
      LatticePolytope q = dilate(p, c.rng.uniform(1, d + 1));
      for (int tries = 0; tries < 5 && !satisfies_condition_01(q).covered; ++tries) {
        p = c.polytope(n, d);
        q = dilate(p, c.rng.uniform(1, d + 1));
      }
      Outcome o{{q}, {}};
      if (!satisfies_condition_01(q).covered) {
        c.tally("hypothesis_not_met");
        return o;
      }
      c.tally("hypothesis_met");
      const PropertyReport r = level_status(q, c.cfg.horizon);
      if (r.verdict == Verdict::Fails) o.violation = violation("meets the interior covering condition but is not level", r);
      return o;
    }};

    auto level_tuple = [](Ctx& c, bool by_dilation) {
      const std::size_t n = c.ambient();
      const std::size_t m = c.summands(n);
      Outcome o;
      for (std::size_t i = 0; i < m; ++i) {
        const int d = c.dim_in(n);
        LatticePolytope p = c.polytope(n, d);
        auto ok = [](const LatticePolytope& q) {
          return !interior_lattice_points(q).empty() && satisfies_condition_01(q).covered;
        };
        LatticePolytope q = dilate(p, by_dilation ? c.rng.uniform(d + 1, d + 2) : c.rng.uniform(1, d + 1));
        if (!by_dilation) {
          for (int tries = 0; tries < 5 && !ok(q); ++tries) {
            p = c.polytope(n, d);
            q = dilate(p, c.rng.uniform(1, d + 1));
          }
          if (!ok(q)) q = dilate(p, d + 1);
        }
        o.inputs.push_back(std::move(q));
      }
      for (const auto& q : o.inputs) {
        if (interior_lattice_points(q).empty()) {
          o.violation = violation("factor has no interior lattice point");
          return o;
        }
        const CoverageResult cov = satisfies_condition_01(q);
        if (!cov.covered) {
          o.violation = violation("factor violates the interior covering condition", coverage_report("cond01", cov));
          return o;
        }
        const PropertyReport lv = level_status(q, c.cfg.horizon);
        if (lv.verdict == Verdict::Fails) {
          o.violation = violation("factor meets the interior covering condition but is not level", lv);
          return o;
        }
      }
      const PropertyReport mink = level_status(minkowski_sum(o.inputs), c.cfg.horizon);
      if (!level_with_index(mink, 1)) {
        o.violation = violation("Minkowski sum is not level of index 1", mink);
        return o;
      }
      const PropertyReport cay = level_status(cayley_sum(o.inputs), c.cfg.horizon);
      if (!level_with_index(cay, static_cast<long>(m)))
        o.violation = violation("Cayley sum is not level of index m", cay);
      return o;
    };

    t["thm_3_2"] = {kTinyCaps, {"factors: random dilates accepted by the interior-point and interior covering deciders"},
                    [level_tuple](Ctx& c) { return level_tuple(c, false); }};
    t["cor_3_4"] = {kTinyCaps, {"factors: dilates n_i in [d_i + 1, d_i + 2]"},
                    [level_tuple](Ctx& c) { return level_tuple(c, true); }};

    t["lemma_3_3"] = {kTinyCaps, {"n = d + 1"}, [](Ctx& c) {
      const std::size_t n = c.ambient();
      const int d = c.dim_in(n);
      Outcome o{{dilate(c.polytope(n, d), d + 1)}, {}};
      if (interior_lattice_points(o.inputs[0]).empty()) {
        o.violation = violation("no interior lattice point");
        return o;
      }
      const CoverageResult cov = satisfies_condition_01(o.inputs[0]);
      if (!cov.covered) o.violation = violation("violates the interior covering condition", coverage_report("cond01", cov));
      return o;
    }};

    t["bn_gorenstein"] = {kTinyCaps, {"Gorenstein verdicts are compared at the same horizon qualification",
                           "half the trials split a dilated cube or simplex with one interior point into two summands"}, [](Ctx& c) {
      Outcome o;
      std::size_t n = 0;
      if (c.rng.coin()) {
        o.inputs = split_reflexive(c);
        n = o.inputs.front().ambient_dim();
        c.tally("split_reflexive_trials");
      } else {
        for (int tries = 0; tries < 50; ++tries) {
          o = tuple_of(c, 2, [](int, LatticePolytope p) { return p; });
          n = o.inputs.front().ambient_dim();
          if (minkowski_sum(o.inputs).dim() == static_cast<int>(n)) break;
        }
      }
      if (minkowski_sum(o.inputs).dim() != static_cast<int>(n)) {
        c.tally("not_full_dimensional");
        return o;
      }
      const long m = static_cast<long>(o.inputs.size());
      const PropertyReport cay = is_gorenstein(cayley_sum(o.inputs), c.cfg.horizon);
      const PropertyReport mink = is_gorenstein(minkowski_sum(o.inputs), c.cfg.horizon);
      const bool gc = level_with_index(cay, m), gm = level_with_index(mink, 1);
      c.tally(gc && gm ? "both_gorenstein" : (!gc && !gm ? "neither_gorenstein" : "disagree"));
      if (gc != gm)
        o.violation = violation(std::string("Cayley Gorenstein of index m = ") + (gc ? "true" : "false") +
                                    ", Minkowski Gorenstein of index 1 = " + (gm ? "true" : "false"),
                                gc ? mink : cay);
      return o;
    }};

    t["hnp_polygon_pair"] = {kHeavyCaps, {"ambient dimension 2; smoothness hypothesis dropped"}, [](Ctx& c) {
      LatticePolytope q = c.polytope(2, 2);
      LatticePolytope p = q;
      bool from_sum = true;
      if (c.rng.coin()) {
        // Exploration: an unrelated polygon, kept only if the fan filter passes.
        LatticePolytope cand = c.polytope(2, 2);
        if (normal_fan_coarsens(cand, q)) {
          p = cand;
          from_sum = false;
          c.tally("random_pairs_kept");
        }
      }
      if (from_sum) {
        const std::vector<LatticePolytope> parts{q, c.polytope(2, c.dim_in(2, 0))};
        p = minkowski_sum(parts);
        c.tally("sum_pairs");
      }
      Outcome o{{p, q}, {}};
      if (!normal_fan_coarsens(p, q)) {
        o.violation = violation("normal fan of Q does not coarsen that of Q + R");
        return o;
      }
      const PropertyReport t2 = is_tuple_idp(o.inputs);
      if (t2.verdict == Verdict::Fails) {
        o.violation = violation("(P, Q) is not IDP", t2);
        return o;
      }
      const PropertyReport cay = is_idp(cayley_sum(o.inputs));
      if (cay.verdict == Verdict::Fails) o.violation = violation("P * Q is not IDP", cay);
      return o;
    }};

    t["edge_criterion"] = {kTinyCaps, {"dimensions capped at 2 (dilation to edge length 2d(d+1))"}, [](Ctx& c) {
      const std::size_t n = static_cast<std::size_t>(c.rng.uniform(1, std::min(c.cfg.dim_max, 2)));
      const int d = c.dim_in(n);
      const LatticePolytope p = c.polytope(n, d);
      Integer shortest = -1;
      for (const auto& e : edges(p))
        if (shortest < 0 || e.lattice_length < shortest) shortest = e.lattice_length;
      const long need = 2L * d * (d + 1);
      const long k = to_int64(Integer((need + shortest - 1) / shortest));
      Outcome o{{dilate(p, k)}, {}};
      if (!edge_length_criterion(o.inputs[0])) {
        o.violation = violation("dilate misses the edge-length threshold");
        return o;
      }
      const CoverageResult cov = is_2_convex_normal(o.inputs[0]);
      if (!cov.covered) {
        o.violation = violation("long edges but not 2-convex-normal", coverage_report("2cn", cov));
        return o;
      }
      const PropertyReport r = is_idp(o.inputs[0]);
      if (r.verdict == Verdict::Fails) o.violation = violation("long edges but not IDP", r);
      return o;
    }};
    return t;
  }();
  return table;
}

}  // namespace

CampaignReport reproduce_example(const std::string& name, long p1, long p2,
                                 std::optional<long> horizon) {
  if (p1 < 1 || p2 < 1) throw Error("example parameters must be positive integers");
  if (name == "example_2_4") return example_2_4(p1, p2);
  if (name == "example_1_9") return example_1_9(p1, p2, horizon);
  throw Error("unknown example '" + name + "' (valid: example_1_9, example_2_4)");
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : campaigns()) v.push_back(k);
    return v;
  }();
  return ids;
}

json config_json(const CampaignConfig& c) {
  return {{"theorem_id", c.theorem_id},         {"trials", c.trials},
          {"seed", c.seed},                     {"dim_max", c.dim_max},
          {"coord_bound", c.coord_bound},       {"dilation_bound", c.dilation_bound},
          {"height_total", c.height_total},
          {"horizon", c.horizon ? json(*c.horizon) : json(nullptr)}};
}

CampaignReport verify_theorem(const CampaignConfig& cfg) {
  const auto& table = campaigns();
  auto it = table.find(cfg.theorem_id);
  if (it == table.end()) {
    std::string valid;
    for (const auto& id : theorem_ids()) valid += (valid.empty() ? "" : ", ") + id;
    throw Error("unknown theorem id '" + cfg.theorem_id + "' (valid: " + valid + ")");
  }
  if (cfg.trials < 1) throw Error("trials must be at least 1");
  if (cfg.dim_max < 1 || cfg.dim_max > 4) throw Error("dim_max must lie in 1..4");
  if (cfg.coord_bound < 1 || cfg.dilation_bound < 1 || cfg.height_total < 1)
    throw Error("bounds must be positive");
  if (cfg.horizon && *cfg.horizon < 1) throw Error("horizon must be positive");

  CampaignReport rep;
  rep.id = cfg.theorem_id;
  rep.config = config_json(cfg);
  const CampaignDef& def = it->second;
  for (std::string n : def.notes) {
    for (const auto& [key, value] : {std::pair<std::string, long>{"{A}", cfg.dilation_bound},
                                     {"{H}", cfg.height_total}})
      if (auto at = n.find(key); at != std::string::npos)
        n.replace(at, key.size(), std::to_string(value));
    rep.notes.push_back(std::move(n));
  }
  if (def.caps.by_dim[1] < 1000000) rep.notes.push_back(def.caps.describe());
  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    Ctx ctx{cfg, rng, rep, def.caps};
    Outcome o = def.run(ctx);
    ++rep.trials;
    if (o.violation) {
      rep.violations.push_back({static_cast<std::size_t>(trial), std::move(o.inputs),
                                std::move(*o.violation)});
    } else {
      ++rep.passed;
    }
  }
  return rep;
}

}  // namespace latcayley
