// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "latcayley/harness.hpp"

namespace latcayley {

using nlohmann::json;

json point_json(const RationalPoint& p) {
  json a = json::array();
  for (const auto& c : p.coords) {
    if (c.get_den() == 1 && fits_int64(c.get_num()))
      a.push_back(to_int64(c.get_num()));
    else
      a.push_back(to_string(c));
  }
  return a;
}

json report_json(const PropertyReport& r, const json& config) {
  json j = json::object();
  j["property"] = r.property;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    json w = json::object();
    if (r.witness->degree) w["degree"] = *r.witness->degree;
    w["point"] = point_json(r.witness->point);
    if (!r.witness->subset.empty()) w["subset"] = r.witness->subset;
    j["witness"] = std::move(w);
  }
  if (r.degrees_checked)
    j["degrees_checked"] = {r.degrees_checked->first, r.degrees_checked->second};
  else
    j["degrees_checked"] = nullptr;
  if (r.horizon_used) j["horizon"] = *r.horizon_used;
  if (r.index) j["index"] = *r.index;
  j["notes"] = r.notes;
  j["config"] = config;
  j["version"] = kVersion;
  return j;
}

std::string report_text(const PropertyReport& r) {
  std::ostringstream os;
  os << "property: " << r.property << "\n";
  os << "verdict:  " << to_string(r.verdict) << "\n";
  if (r.index) os << "index:    " << *r.index << "\n";
  if (r.witness) {
    os << "witness: ";
    if (r.witness->degree) os << " degree " << *r.witness->degree << ",";
    if (!r.witness->subset.empty()) {
      os << " subset {";
      for (std::size_t i = 0; i < r.witness->subset.size(); ++i)
        os << (i ? "," : "") << r.witness->subset[i];
      os << "},";
    }
    os << " point " << r.witness->point.to_string() << "\n";
  }
  if (r.degrees_checked)
    os << "degrees:  " << r.degrees_checked->first << ".." << r.degrees_checked->second << "\n";
  if (r.horizon_used) os << "horizon:  " << *r.horizon_used << "\n";
  for (const auto& n : r.notes) os << "note:     " << n << "\n";
  return os.str();
}

namespace {

bool in(const LatticePolytope& p, long scale, const RationalPoint& x, ContainMode mode) {
  return contains(dilate(p, scale).desc(), x, mode);
}

// x = y_k + ... + y_last with y_i lattice points of ps[i]?
bool decomposes(const std::vector<LatticePolytope>& ps, std::size_t k,
                const RationalPoint& x) {
  if (k + 1 == ps.size()) return x.is_integral() && contains(ps[k].desc(), x, ContainMode::Closed);
  const PointSet pts = lattice_points(ps[k]);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (decomposes(ps, k + 1, x - pts.rational(i))) return true;
  return false;
}

bool recheck_level(const LatticePolytope& p, long r, long n, const RationalPoint& x) {
  for (long t = 1; t < r; ++t)
    if (!interior_lattice_points(dilate(p, t)).empty()) return false;
  const PointSet gens = interior_lattice_points(dilate(p, r));
  if (gens.empty() || !in(p, n, x, ContainMode::RelativeInterior)) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (in(p, n - r, x - gens.rational(i), ContainMode::Closed)) return false;
  return true;
}

}  // namespace

bool recheck_witness(const PropertyReport& r, const std::vector<LatticePolytope>& inputs) {
  if (r.verdict != Verdict::Fails || !r.witness || inputs.empty()) return false;
  const RationalPoint& x = r.witness->point;
  const LatticePolytope& p = inputs.front();
  if (r.property == "tuple-idp") {
    std::vector<LatticePolytope> sub;
    for (auto i : r.witness->subset) {
      if (i < 1 || i > inputs.size()) return false;
      sub.push_back(inputs[i - 1]);
    }
    if (sub.size() < 2 || !x.is_integral()) return false;
    return contains(minkowski_sum(sub).desc(), x, ContainMode::Closed) &&
           !decomposes(sub, 0, x);
  }
  if (r.property == "2cn" || r.property == "cond01") {
    const ContainMode mode =
        r.property == "2cn" ? ContainMode::Closed : ContainMode::RelativeInterior;
    if (!in(p, 2, x, mode)) return false;
    const PointSet pts = lattice_points(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (contains(p.desc(), x - pts.rational(i), mode)) return false;
    return true;
  }
  if (!r.witness->degree || !x.is_integral()) return false;
  const long n = *r.witness->degree;
  if (r.property == "idp") {
    if (n < 2 || !in(p, n, x, ContainMode::Closed)) return false;
    const PointSet pts = lattice_points(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (in(p, n - 1, x - pts.rational(i), ContainMode::Closed)) return false;
    return true;
  }
  if (!r.index) return false;
  const long idx = *r.index;
  if (r.property == "gorenstein" && n == idx) {
    // Second interior point at the level index.
    const PointSet gens = interior_lattice_points(dilate(p, idx));
    return gens.size() > 1 && in(p, idx, x, ContainMode::RelativeInterior);
  }
  if (r.property == "level" || r.property == "gorenstein")
    return n > idx && recheck_level(p, idx, n, x);
  return false;
}

bool CampaignReport::ok() const {
  if (!violations.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json campaign_json(const CampaignReport& r) {
  json j = json::object();
  j["id"] = r.id;
  j["ok"] = r.ok();
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  json vs = json::array();
  for (const auto& v : r.violations) {
    json inputs = json::array();
    for (const auto& p : v.inputs) inputs.push_back(polytope_json(p));
    vs.push_back({{"trial", v.trial},
                  {"inputs", std::move(inputs)},
                  {"report", report_json(v.report, json::object())}});
  }
  j["violations"] = std::move(vs);
  j["tallies"] = r.tallies;
  j["notes"] = r.notes;
  j["config"] = r.config;
  j["version"] = kVersion;
  return j;
}

std::string campaign_text(const CampaignReport& r) {
  std::ostringstream os;
  os << r.id << ": " << (r.ok() ? "ok" : "FAILED");
  if (r.trials) os << " (" << r.passed << "/" << r.trials << " trials passed)";
  os << "\n";
  for (const auto& c : r.checks)
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name
       << (c.detail.is_null() ? "" : "  " + c.detail.dump()) << "\n";
  for (const auto& v : r.violations) {
    os << "  violation in trial " << v.trial << ": " << v.report.property << " "
       << to_string(v.report.verdict);
    if (v.report.witness) os << " at " << v.report.witness->point.to_string();
    for (const auto& n : v.report.notes) os << "; " << n;
    os << "\n";
  }
  for (const auto& [k, n] : r.tallies) os << "  " << k << ": " << n << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace latcayley
