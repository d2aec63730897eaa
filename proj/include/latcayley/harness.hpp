// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Polytope files, seeded random instances, report serialization, example
// reproduction and randomized theorem-verification campaigns.

#ifndef LATCAYLEY_HARNESS_HPP_
#define LATCAYLEY_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "latcayley/properties.hpp"

namespace latcayley {

inline constexpr const char* kVersion = "latcayley 0.1.0";

// ---- polytope files -------------------------------------------------------

struct PolytopeFile {
  std::optional<std::string> name;
  LatticePolytope polytope;
};

/// Parses {"name"?, "ambient_dim", "vertices": [[int, ...], ...]}. `where`
/// prefixes error messages.
PolytopeFile parse_polytope(const nlohmann::json& j, const std::string& where = "polytope");
PolytopeFile parse_polytope_text(const std::string& text, const std::string& where = "polytope");
PolytopeFile load_polytope(const std::string& path);
nlohmann::json polytope_json(const LatticePolytope& p,
                             const std::optional<std::string>& name = {});
void save_polytope(const LatticePolytope& p, const std::string& path,
                   const std::optional<std::string>& name = {});

// ---- randomness -----------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x);
/// Seed for trial `trial` of a campaign seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// mt19937_64 with a bounded sampler whose output does not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// conv of n_points integer points in [-coord_bound, coord_bound]^ambient_dim
/// whose hull has dimension exactly `dim`.
LatticePolytope random_lattice_polytope(std::uint64_t seed, std::size_t ambient_dim,
                                        int dim, long coord_bound, std::size_t n_points);
LatticePolytope random_lattice_polytope(Rng& rng, std::size_t ambient_dim, int dim,
                                        long coord_bound, std::size_t n_points);

// ---- reports --------------------------------------------------------------

nlohmann::json point_json(const RationalPoint& p);
nlohmann::json report_json(const PropertyReport& r, const nlohmann::json& config);
std::string report_text(const PropertyReport& r);

/// Independent re-check of a Fails witness against the defining equality,
/// using rational membership on freshly built dilates and sums. `inputs` is
/// the polytope, or the tuple for tuple-idp.
bool recheck_witness(const PropertyReport& r, const std::vector<LatticePolytope>& inputs);

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::vector<LatticePolytope> inputs;
  PropertyReport report;
};

struct CampaignReport {
  std::string id;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<Check> checks;             // example reproductions
  std::vector<TrialFailure> violations;  // theorem campaigns
  std::map<std::string, long> tallies;
  std::vector<std::string> notes;
  nlohmann::json config;

  bool ok() const;
};

nlohmann::json campaign_json(const CampaignReport& r);
std::string campaign_text(const CampaignReport& r);

// ---- examples and campaigns -----------------------------------------------

/// "example_1_9" (params h, n) or "example_2_4" (params n1, n2).
CampaignReport reproduce_example(const std::string& name, long p1 = 1, long p2 = 1,
                                 std::optional<long> horizon = {});

struct CampaignConfig {
  std::string theorem_id;
  long trials = 25;
  std::uint64_t seed = 1;
  int dim_max = 3;
  long coord_bound = 4;
  long dilation_bound = 3;       // A, for boxed dilation quantifiers
  long height_total = 4;         // heights in the slice lemmas sum to at most this
  std::optional<long> horizon;   // level horizon override
};

const std::vector<std::string>& theorem_ids();
nlohmann::json config_json(const CampaignConfig& c);
CampaignReport verify_theorem(const CampaignConfig& c);

}  // namespace latcayley

#endif  // LATCAYLEY_HARNESS_HPP_
