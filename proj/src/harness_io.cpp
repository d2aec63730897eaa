// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "latcayley/harness.hpp"

namespace latcayley {

using nlohmann::json;

PolytopeFile parse_polytope(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": expected a JSON object");
  PolytopeFile out;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(where + ": field 'name' must be a string");
    out.name = j["name"].get<std::string>();
  }
  if (!j.contains("ambient_dim")) throw Error(where + ": missing field 'ambient_dim'");
  const json& ad = j["ambient_dim"];
  if (!ad.is_number_integer() || ad.get<long long>() < 1)
    throw Error(where + ": field 'ambient_dim' must be a positive integer");
  const auto n = static_cast<std::size_t>(ad.get<long long>());
  if (!j.contains("vertices")) throw Error(where + ": missing field 'vertices'");
  const json& vs = j["vertices"];
  if (!vs.is_array() || vs.empty())
    throw Error(where + ": field 'vertices' must be a nonempty array");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = where + ": vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_array()) throw Error(at + " must be an array");
    if (vs[i].size() != n)
      throw Error(at + " has " + std::to_string(vs[i].size()) +
                  " coordinates, ambient_dim is " + std::to_string(n));
    LatticePoint p;
    for (std::size_t c = 0; c < n; ++c) {
      const json& x = vs[i][c];
      if (x.is_number_float()) throw Error(at + ": non-integer vertex " + vs[i].dump());
      if (!x.is_number_integer()) throw Error(at + "[" + std::to_string(c) + "] must be an integer");
      if (x.is_number_unsigned() &&
          x.get<unsigned long long>() >
              static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max()))
        throw Error(at + "[" + std::to_string(c) + "] exceeds the 64-bit range");
      p.push_back(x.get<std::int64_t>());
    }
    pts.push_back(std::move(p));
  }
  out.polytope = LatticePolytope::from_vertices(pts);
  return out;
}

PolytopeFile parse_polytope_text(const std::string& text, const std::string& where) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(where + ": malformed JSON (" + e.what() + ")");
  }
  return parse_polytope(j, where);
}

PolytopeFile load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope_text(ss.str(), path);
}

json polytope_json(const LatticePolytope& p, const std::optional<std::string>& name) {
  json j = json::object();
  if (name) j["name"] = *name;
  j["ambient_dim"] = p.ambient_dim();
  json vs = json::array();
  for (const auto& v : p.int_vertices()) vs.push_back(v);
  j["vertices"] = std::move(vs);
  return j;
}

void save_polytope(const LatticePolytope& p, const std::string& path,
                   const std::optional<std::string>& name) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << polytope_json(p, name).dump(2) << "\n";
  if (!out) throw Error("write failed: " + path);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 0x5eed));
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max())
    return static_cast<long>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % range);
}

LatticePolytope random_lattice_polytope(std::uint64_t seed, std::size_t ambient_dim,
                                        int dim, long coord_bound,
                                        std::size_t n_points) {
  Rng rng(seed);
  return random_lattice_polytope(rng, ambient_dim, dim, coord_bound, n_points);
}

LatticePolytope random_lattice_polytope(Rng& rng, std::size_t ambient_dim, int dim,
                                        long coord_bound, std::size_t n_points) {
  if (ambient_dim < 1) throw Error("ambient dimension must be positive");
  if (dim < 0 || static_cast<std::size_t>(dim) > ambient_dim)
    throw Error("requested dimension exceeds the ambient dimension");
  if (n_points < static_cast<std::size_t>(dim) + 1)
    throw Error("need at least dim + 1 points");
  if (coord_bound < 1) throw Error("coordinate bound must be positive");
  const long b = coord_bound;
  const std::size_t d = static_cast<std::size_t>(dim);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Points (y, M y + c) up to a coordinate permutation span at most a
    // d-dimensional affine space; points leaving the box are redrawn.
    std::vector<std::vector<long>> m(ambient_dim - d, std::vector<long>(d));
    std::vector<long> c(ambient_dim - d);
    for (auto& row : m)
      for (auto& x : row) x = rng.uniform(-1, 1);
    for (auto& x : c) x = rng.uniform(-b, b);
    std::vector<std::size_t> perm(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) perm[i] = i;
    for (std::size_t i = ambient_dim; i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);

    std::vector<LatticePoint> pts;
    int misses = 0;
    while (pts.size() < n_points && misses < 1000) {
      std::vector<long> y(d);
      for (auto& x : y) x = rng.uniform(-b, b);
      LatticePoint p(ambient_dim);
      bool in_box = true;
      for (std::size_t i = 0; i < ambient_dim; ++i) {
        long v;
        if (i < d) {
          v = y[i];
        } else {
          v = c[i - d];
          for (std::size_t k = 0; k < d; ++k) v += m[i - d][k] * y[k];
        }
        in_box = in_box && v >= -b && v <= b;
        p[perm[i]] = v;
      }
      if (in_box) {
        pts.push_back(std::move(p));
      } else {
        ++misses;
      }
    }
    if (pts.size() < n_points) continue;
    LatticePolytope p = LatticePolytope::from_vertices(pts);
    if (p.dim() == dim) return p;
  }
  throw Error("could not reach dimension " + std::to_string(dim) + " after 1000 resamples");
}

}  // namespace latcayley
