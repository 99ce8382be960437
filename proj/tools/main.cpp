// Copyright 2026 The prosdp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "prosdp/io.hpp"

namespace {

using nlohmann::json;
using namespace prosdp;

struct Flags {
  std::string problem, candidate, out, dump_conic;
  int samples = 1000;
  unsigned long long seed = 0;
  int grid = 21;
  bool pro = false;
  double gap_tol = 1e-8;
  double strict_tol = -1.0;  // < 0: use the module default
};

json sym_json(const SymMatrix& m) { return json::parse(sym_to_json(m)); }

/// Accepts robust_sdp, eigen, and maxcut files wherever a robust SDP is
/// expected.
RobustSdpProblem load_robust_sdp(const ProblemFile& p) {
  switch (p.kind) {
    case ProblemKind::RobustSdp:
      return as_robust_sdp(p);
    case ProblemKind::Eigen:
      return as_eigen(p).to_problem();
    case ProblemKind::Maxcut:
      return relaxation_problem(as_graph(p));
    default:
      throw std::runtime_error("this command needs a robust SDP problem file");
  }
}

ProOptions pro_options(const Flags& f) {
  ProOptions opts;
  opts.solver.gap_tol = f.gap_tol;
  return opts;
}

void maybe_dump_conic(const Flags& f, const RobustSdpProblem& prob) {
  if (f.dump_conic.empty()) return;
  std::ofstream out(f.dump_conic);
  if (!out) throw std::runtime_error("cannot write " + f.dump_conic);
  out << dump_conic_json(robust_counterpart(prob)) << "\n";
}

json run_solve_robust(const Flags& f, const ProblemFile& p) {
  const RobustSdpProblem prob = load_robust_sdp(p);
  maybe_dump_conic(f, prob);
  const RobustSolution sol = solve_robust(prob, pro_options(f));
  return {{"value", sol.value},
          {"x", sym_json(sol.x)},
          {"iterations", sol.raw.iterations},
          {"gap", sol.raw.gap}};
}

json run_verify_pro(const Flags& f, const ProblemFile& p) {
  const RobustSdpProblem prob = load_robust_sdp(p);
  maybe_dump_conic(f, prob);
  const SymMatrix x = sym_from_file(f.candidate);
  ParetoVerdict v = verify_pro(prob, x, pro_options(f));
  if (f.strict_tol >= 0) {
    v.strict_tol = f.strict_tol;
    v.status = v.nominal_gain > v.strict_tol ? ParetoStatus::Dominated
                                             : ParetoStatus::Pro;
  }
  json out{{"status", v.status == ParetoStatus::Pro ? "pro" : "dominated"},
           {"nominal_gain", v.nominal_gain},
           {"strict_tol", v.strict_tol}};
  if (v.direction) out["direction"] = sym_json(*v.direction);
  if (v.certificate_scenario) out["scenario_mu"] = *v.certificate_scenario;
  return out;
}

json run_improve_pro(const Flags& f, const ProblemFile& p) {
  const RobustSdpProblem prob = load_robust_sdp(p);
  const SymMatrix x = sym_from_file(f.candidate);
  const SymMatrix improved = improve_to_pro(prob, x, pro_options(f));
  return {{"x_pro", sym_json(improved)},
          {"robust_value", prob.uncertainty.inner_min(improved).value}};
}

json run_check_all_pro(const Flags& f, const ProblemFile& p) {
  const RobustSdpProblem prob = load_robust_sdp(p);
  const AllProResult r = check_all_pro(prob, pro_options(f));
  json out{{"all_pro", r.all_pro}, {"value", r.value}};
  if (r.witness) {
    out["witness"] = {{"dominated", sym_json(r.witness->first)},
                      {"dominating", sym_json(r.witness->second)}};
  }
  return out;
}

json run_eigenvalue(const Flags& f, const ProblemFile& p) {
  const EigenInstance inst = as_eigen(p);
  const RobustEigResult r = robust_lambda_max(inst, pro_options(f));
  json out{{"robust_value", r.value}, {"x", sym_json(r.x)}};
  if (f.pro) {
    const ProEigReport rep =
        robust_lambda_max_pro(inst, r.x, f.grid, pro_options(f));
    json grid = json::array();
    for (const auto& pt : rep.grid)
      grid.push_back({{"mu", pt.mu},
                      {"input_value", pt.input_value},
                      {"output_value", pt.output_value}});
    out["x_pro"] = sym_json(rep.x_pro);
    out["grid_report"] = grid;
    if (rep.eigenvector) out["eigenvector"] = *rep.eigenvector;
  }
  return out;
}

json run_maxcut(const Flags& f, const ProblemFile& p) {
  const UncertainGraph g = as_graph(p);
  const SdpResult sdp = robust_maxcut_sdp(g, pro_options(f));
  SymMatrix y = sdp.y;
  if (f.pro && !g.singleton()) y = pro_improve_relaxation(g, y, pro_options(f));
  const GwResult gw = gw_round(g, y, f.samples, f.seed);
  return {{"sdp_value", sdp.value},
          {"cut", gw.best.signs},
          {"worst_case", gw.best_worst_case},
          {"nominal_value", gw.best_nominal},
          {"empirical_ratio",
           sdp.value > 0 ? gw.mean_worst_case / sdp.value : 0.0}};
}

json run_comb_pro(const Flags&, const ProblemFile& p) {
  const BinaryRobustProblem prob = as_binary(p);
  const ProPartition part = brute_force_pro(prob);
  json dominated = json::array();
  for (const auto& d : part.dominated)
    dominated.push_back({{"x", d.x}, {"dominator", d.dominator}});
  return {{"value", part.value}, {"pro", part.pro}, {"dominated", dominated}};
}

json run_report(const Flags&, const ProblemFile& p) {
  json out{{"kind", to_string(p.kind)}, {"version", p.version}};
  switch (p.kind) {
    case ProblemKind::RobustSdp: {
      const RobustSdpProblem prob = as_robust_sdp(p);
      out["dim"] = prob.feasible.dim();
      out["constraints"] = prob.feasible.rows.size();
      out["uncertain_directions"] = prob.uncertainty.direction_count();
      break;
    }
    case ProblemKind::Eigen:
      out["dim"] = as_eigen(p).uncertainty.dim();
      break;
    case ProblemKind::Maxcut: {
      const UncertainGraph g = as_graph(p);
      out["vertices"] = g.n;
      out["edges"] = g.edges.size();
      break;
    }
    case ProblemKind::Binary: {
      const BinaryRobustProblem prob = as_binary(p);
      out["n"] = prob.n;
      out["feasible_points"] = prob.feasible.size();
      break;
    }
  }
  return out;
}

void add_common(CLI::App* cmd, Flags* f) {
  cmd->add_option("--out", f->out, "Write the result envelope to this path");
  cmd->add_option("--gap-tol", f->gap_tol, "Solver duality-gap tolerance");
}

int run(const std::string& command, const Flags& f, json params) {
  const auto start = std::chrono::steady_clock::now();
  const ProblemFile p = parse_problem_file(f.problem);
  json outputs;
  if (command == "solve-robust") outputs = run_solve_robust(f, p);
  else if (command == "verify-pro") outputs = run_verify_pro(f, p);
  else if (command == "improve-pro") outputs = run_improve_pro(f, p);
  else if (command == "check-all-pro") outputs = run_check_all_pro(f, p);
  else if (command == "eigenvalue") outputs = run_eigenvalue(f, p);
  else if (command == "maxcut") outputs = run_maxcut(f, p);
  else if (command == "comb-pro") outputs = run_comb_pro(f, p);
  else outputs = run_report(f, p);
  const auto stop = std::chrono::steady_clock::now();

  ResultEnvelope env;
  env.digest = content_digest(p.text);
  env.command = command;
  env.parameters_json = params.dump();
  env.outputs_json = outputs.dump();
  env.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  const std::string text = envelope_to_json(env);
  if (f.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(f.out);
    if (!os) throw std::runtime_error("cannot write " + f.out);
    os << text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto robust optimization toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto* solve = app.add_subcommand("solve-robust", "Solve the robust SDP");
  solve->add_option("--problem", f.problem)->required();
  solve->add_option("--dump-conic", f.dump_conic,
                    "Dump the assembled conic program");
  add_common(solve, &f);

  auto* verify = app.add_subcommand("verify-pro",
                                    "Decide Pareto robust optimality");
  verify->add_option("--problem", f.problem)->required();
  verify->add_option("--candidate", f.candidate)->required();
  verify->add_option("--strict-tol", f.strict_tol,
                     "Override the strict-improvement threshold");
  verify->add_option("--dump-conic", f.dump_conic);
  add_common(verify, &f);

  auto* improve = app.add_subcommand("improve-pro",
                                     "Improve a robust solution to PRO");
  improve->add_option("--problem", f.problem)->required();
  improve->add_option("--candidate", f.candidate)->required();
  add_common(improve, &f);

  auto* all = app.add_subcommand("check-all-pro",
                                 "Check whether every robust optimum is PRO");
  all->add_option("--problem", f.problem)->required();
  add_common(all, &f);

  auto* eig = app.add_subcommand("eigenvalue", "Robust largest eigenvalue");
  eig->add_option("--instance", f.problem)->required();
  eig->add_flag("--pro", f.pro, "Also improve to PRO and report a mu grid");
  eig->add_option("--grid", f.grid, "Grid points per uncertain coordinate");
  add_common(eig, &f);

  auto* mc = app.add_subcommand("maxcut", "Robust max cut via SDP + rounding");
  mc->add_option("--graph", f.problem)->required();
  mc->add_option("--samples", f.samples);
  mc->add_option("--seed", f.seed);
  mc->add_flag("--pro", f.pro, "Improve the relaxation solution to PRO first");
  add_common(mc, &f);

  auto* comb = app.add_subcommand("comb-pro",
                                  "Exact PRO partition of a binary problem");
  comb->add_option("--instance", f.problem)->required();
  add_common(comb, &f);

  auto* report = app.add_subcommand("report", "Summarize a problem file");
  report->add_option("--problem", f.problem)->required();
  add_common(report, &f);

  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  json params{{"gap_tol", f.gap_tol}};
  if (sub->get_name() == "maxcut") {
    params["samples"] = f.samples;
    params["seed"] = f.seed;
    params["pro"] = f.pro;
  }
  if (sub->get_name() == "eigenvalue") {
    params["pro"] = f.pro;
    params["grid"] = f.grid;
  }
  try {
    return run(sub->get_name(), f, std::move(params));
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool infeasible = e.status() == SolveStatus::PrimalInfeasible ||
                            e.status() == SolveStatus::DualInfeasible;
    return infeasible ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
