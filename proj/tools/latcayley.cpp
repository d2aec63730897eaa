// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// latcayley: command-line front end.
//
// Exit codes: 0 holds / covered / campaign clean, 1 fails / not covered /
// violations, 2 usage or input errors, 3 a computation that could not finish
// (for example an exhausted cell budget).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "latcayley/harness.hpp"

using namespace latcayley;
using nlohmann::json;

namespace {

struct InputError : Error {
  using Error::Error;
};

struct Common {
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", c.out, "Also write the JSON report to PATH");
}

void emit(const Common& c, const json& report, const std::string& text) {
  if (c.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw InputError("cannot write " + c.out);
    f << report.dump(2) << "\n";
  }
}

std::vector<LatticePolytope> load_all(const std::vector<std::string>& files,
                                      const std::vector<std::string>& inline_json) {
  std::vector<LatticePolytope> ps;
  try {
    for (const auto& f : files) ps.push_back(load_polytope(f).polytope);
    for (std::size_t i = 0; i < inline_json.size(); ++i)
      ps.push_back(
          parse_polytope_text(inline_json[i], "--inline #" + std::to_string(i + 1)).polytope);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (ps.empty()) throw InputError("no polytope given (pass a file or --inline JSON)");
  return ps;
}

struct CheckArgs {
  std::vector<std::string> files, inline_json;
  std::string property;
  std::optional<long> max_degree, horizon;
  Common common;
};

int run_check(const CheckArgs& a) {
  const auto ps = load_all(a.files, a.inline_json);
  if (a.property != "tuple-idp" && ps.size() != 1)
    throw InputError("property '" + a.property + "' takes exactly one polytope");
  const LatticePolytope& p = ps.front();
  PropertyReport r;
  if (a.property == "idp") {
    r = is_idp(p, a.max_degree);
  } else if (a.property == "tuple-idp") {
    r = is_tuple_idp(ps);
  } else if (a.property == "2cn") {
    r = coverage_report("2cn", is_2_convex_normal(p));
  } else if (a.property == "cond01") {
    r = coverage_report("cond01", satisfies_condition_01(p));
  } else if (a.property == "level") {
    r = level_status(p, a.horizon);
  } else if (a.property == "gorenstein") {
    r = is_gorenstein(p, a.horizon);
  } else {
    r.property = "edge-criterion";
    r.verdict = edge_length_criterion(p) ? Verdict::Holds : Verdict::Fails;
  }
  json config = {{"command", "check"}, {"property", a.property}, {"inputs", json::array()}};
  for (const auto& q : ps) config["inputs"].push_back(polytope_json(q));
  if (a.max_degree) config["max_degree"] = *a.max_degree;
  if (a.horizon) config["horizon"] = *a.horizon;
  emit(a.common, report_json(r, config), report_text(r));
  return r.verdict == Verdict::Fails ? 1 : 0;
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> files, inline_json;
  long factor = 0;
  std::string out, name;
};

int run_construct(const ConstructArgs& a) {
  const auto ps = load_all(a.files, a.inline_json);
  LatticePolytope r;
  if (a.kind == "dilate") {
    if (ps.size() != 1) throw InputError("dilate takes exactly one polytope");
    if (a.factor < 0) throw InputError("--factor must be nonnegative");
    r = dilate(ps.front(), a.factor);
  } else {
    for (const auto& q : ps)
      if (q.ambient_dim() != ps.front().ambient_dim())
        throw InputError("all polytopes must share the ambient dimension");
    r = a.kind == "minkowski" ? minkowski_sum(ps) : cayley_sum(ps);
  }
  const std::optional<std::string> name =
      a.name.empty() ? std::nullopt : std::optional<std::string>(a.name);
  if (a.out.empty())
    std::cout << polytope_json(r, name).dump(2) << "\n";
  else
    save_polytope(r, a.out, name);
  return 0;
}

struct RandomArgs {
  std::uint64_t seed = 1;
  std::size_t ambient = 2;
  int dim = 2;
  long coord_bound = 4;
  std::size_t points = 0;
  std::string out;
};

int run_random(const RandomArgs& a) {
  LatticePolytope p;
  try {
    p = random_lattice_polytope(a.seed, a.ambient, a.dim, a.coord_bound,
                                a.points ? a.points : static_cast<std::size_t>(a.dim) + 1);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const std::string name = "random-" + std::to_string(a.seed);
  if (a.out.empty())
    std::cout << polytope_json(p, name).dump(2) << "\n";
  else
    save_polytope(p, a.out, name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for lattice polytopes, Minkowski sums and Cayley sums"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide a property of a polytope (or tuple)");
  c->add_option("files", check.files, "Polytope JSON files");
  c->add_option("--inline", check.inline_json, "Polytope given as a JSON string");
  c->add_option("--property", check.property, "Property to decide")
      ->required()
      ->check(CLI::IsMember({"idp", "tuple-idp", "2cn", "cond01", "level", "gorenstein",
                             "edge-criterion"}));
  c->add_option("--max-degree", check.max_degree, "Highest dilate checked for idp")
      ->check(CLI::PositiveNumber);
  c->add_option("--horizon", check.horizon, "Highest degree checked for level/gorenstein")
      ->check(CLI::PositiveNumber);
  add_common(c, check.common);

  ConstructArgs cons;
  auto* k = app.add_subcommand("construct", "Build a Minkowski sum, Cayley sum or dilate");
  k->add_option("kind", cons.kind, "minkowski | cayley | dilate")
      ->required()
      ->check(CLI::IsMember({"minkowski", "cayley", "dilate"}));
  k->add_option("files", cons.files, "Polytope JSON files");
  k->add_option("--inline", cons.inline_json, "Polytope given as a JSON string");
  k->add_option("--factor", cons.factor, "Dilation factor (dilate)");
  k->add_option("--name", cons.name, "Name stored in the output file");
  k->add_option("--out", cons.out, "Output polytope file (stdout if omitted)");

  std::string example;
  std::vector<long> params;
  std::optional<long> rep_horizon;
  Common rep_common;
  auto* r = app.add_subcommand("reproduce", "Reproduce a worked example");
  r->add_option("example", example, "example_1_9 | example_2_4")
      ->required()
      ->check(CLI::IsMember({"example_1_9", "example_2_4"}));
  r->add_option("--params", params, "Two positive integers (h n, or n1 n2)")->expected(2);
  r->add_option("--horizon", rep_horizon, "Starting level horizon")->check(CLI::PositiveNumber);
  add_common(r, rep_common);

  CampaignConfig cfg;
  long seed = 1;
  Common ver_common;
  auto* v = app.add_subcommand("verify", "Run a randomized verification campaign");
  v->add_option("theorem_id", cfg.theorem_id, "Campaign id")
      ->required()
      ->check(CLI::IsMember(theorem_ids()));
  v->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
  v->add_option("--seed", seed, "Campaign seed");
  v->add_option("--dim-max", cfg.dim_max, "Largest ambient dimension")->check(CLI::Range(1, 4));
  v->add_option("--coord-bound", cfg.coord_bound, "Coordinate bound")->check(CLI::PositiveNumber);
  v->add_option("--dilation-bound", cfg.dilation_bound, "Dilation box bound A")
      ->check(CLI::PositiveNumber);
  v->add_option("--height-total", cfg.height_total, "Height sum bound for slice campaigns")
      ->check(CLI::PositiveNumber);
  v->add_option("--horizon", cfg.horizon, "Level horizon override")->check(CLI::PositiveNumber);
  add_common(v, ver_common);

  RandomArgs rnd;
  auto* g = app.add_subcommand("random", "Write a seeded random lattice polytope");
  g->add_option("--seed", rnd.seed, "Seed");
  g->add_option("--ambient-dim", rnd.ambient, "Ambient dimension")->check(CLI::PositiveNumber);
  g->add_option("--dim", rnd.dim, "Dimension of the hull")->check(CLI::NonNegativeNumber);
  g->add_option("--coord-bound", rnd.coord_bound, "Coordinate bound")->check(CLI::PositiveNumber);
  g->add_option("--points", rnd.points, "Number of points drawn (default dim + 1)");
  g->add_option("--out", rnd.out, "Output polytope file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return run_check(check);
    if (k->parsed()) return run_construct(cons);
    if (g->parsed()) return run_random(rnd);
    if (r->parsed()) {
      const long p1 = params.empty() ? 1 : params[0], p2 = params.empty() ? 1 : params[1];
      if (p1 < 1 || p2 < 1) throw InputError("--params must be positive integers");
      const CampaignReport rep = reproduce_example(example, p1, p2, rep_horizon);
      emit(rep_common, campaign_json(rep), campaign_text(rep));
      return rep.ok() ? 0 : 1;
    }
    if (v->parsed()) {
      cfg.seed = static_cast<std::uint64_t>(seed);
      const CampaignReport rep = verify_theorem(cfg);
      emit(ver_common, campaign_json(rep), campaign_text(rep));
      return rep.ok() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
