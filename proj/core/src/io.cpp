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

#include "prosdp/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace prosdp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message, const std::string& pointer) {
  throw ParseError(message, pointer.empty() ? "/" : pointer);
}

const json& field(const json& j, const char* key, const std::string& pointer) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'", pointer);
  return *it;
}

double number(const json& j, const std::string& pointer) {
  if (!j.is_number()) fail("expected a number", pointer);
  return j.get<double>();
}

int integer(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) fail("expected an integer", pointer);
  return j.get<int>();
}

std::vector<double> number_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) fail("expected an array", pointer);
  std::vector<double> out;
  for (size_t k = 0; k < j.size(); ++k)
    out.push_back(number(j[k], pointer + "/" + std::to_string(k)));
  return out;
}

SymMatrix sym_from(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail("expected a matrix object", pointer);
  const int dim = integer(field(j, "dim", pointer), pointer + "/dim");
  if (dim <= 0) fail("matrix dim must be positive", pointer + "/dim");
  const std::vector<double> upper =
      number_list(field(j, "upper", pointer), pointer + "/upper");
  SymMatrix m(dim);
  if (upper.size() != m.upper().size())
    fail("upper triangle has wrong length", pointer + "/upper");
  m.upper() = upper;
  return m;
}

json sym_to(const SymMatrix& m) {
  return json{{"dim", m.dim()}, {"upper", m.upper()}};
}

MatrixBoxUncertainty box_from(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail("expected an uncertainty object", pointer);
  SymMatrix base = sym_from(field(j, "base", pointer), pointer + "/base");
  const json& jd = field(j, "directions", pointer);
  if (!jd.is_array() || jd.empty())
    fail("expected a non-empty direction array", pointer + "/directions");
  std::vector<SymMatrix> dirs;
  for (size_t k = 0; k < jd.size(); ++k)
    dirs.push_back(sym_from(jd[k], pointer + "/directions/" + std::to_string(k)));
  std::vector<double> lo = number_list(field(j, "lo", pointer), pointer + "/lo");
  std::vector<double> hi = number_list(field(j, "hi", pointer), pointer + "/hi");
  if (lo.size() != dirs.size()) fail("lo length mismatch", pointer + "/lo");
  if (hi.size() != dirs.size()) fail("hi length mismatch", pointer + "/hi");
  for (size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k])
      fail("mu bound has lo > hi", pointer + "/lo/" + std::to_string(k));
  try {
    return MatrixBoxUncertainty(std::move(base), std::move(dirs), std::move(lo),
                                std::move(hi));
  } catch (const std::invalid_argument& e) {
    fail(e.what(), pointer);
  }
}

Spectrahedron spectrahedron_from(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail("expected a spectrahedron object", pointer);
  Spectrahedron s;
  const json& jr = field(j, "rows", pointer);
  if (!jr.is_array()) fail("expected a row array", pointer + "/rows");
  for (size_t k = 0; k < jr.size(); ++k) {
    const std::string rp = pointer + "/rows/" + std::to_string(k);
    s.rows.push_back({sym_from(field(jr[k], "lhs", rp), rp + "/lhs"),
                      number(field(jr[k], "rhs", rp), rp + "/rhs")});
  }
  return s;
}

UncertainGraph graph_from(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail("expected a graph object", pointer);
  UncertainGraph g;
  g.n = integer(field(j, "n", pointer), pointer + "/n");
  const bool affine = j.contains("mu_box");
  g.kind = affine ? UncertainGraph::Kind::Affine : UncertainGraph::Kind::Box;
  if (affine) {
    const std::vector<double> box =
        number_list(j["mu_box"], pointer + "/mu_box");
    if (box.size() != 2) fail("mu_box must be [lo, hi]", pointer + "/mu_box");
    g.mu_lo = box[0];
    g.mu_hi = box[1];
  }
  const json& je = field(j, "edges", pointer);
  if (!je.is_array()) fail("expected an edge array", pointer + "/edges");
  for (size_t k = 0; k < je.size(); ++k) {
    const std::string ep = pointer + "/edges/" + std::to_string(k);
    UncertainGraph::Edge e;
    e.i = integer(field(je[k], "i", ep), ep + "/i");
    e.j = integer(field(je[k], "j", ep), ep + "/j");
    if (affine) {
      e.w0 = number(field(je[k], "w0", ep), ep + "/w0");
      e.w_mu = number(field(je[k], "w_mu", ep), ep + "/w_mu");
    } else {
      e.w = number(field(je[k], "w", ep), ep + "/w");
      e.dev = je[k].contains("dev") ? number(je[k]["dev"], ep + "/dev") : 0.0;
    }
    g.edges.push_back(e);
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what(), pointer);
  }
  return g;
}

BinaryUncertainty binary_uncertainty_from(const json& j,
                                          const std::string& pointer) {
  const std::string kind =
      field(j, "kind", pointer).get<std::string>();
  if (kind == "interval") {
    try {
      return IntervalUncertainty(
          number_list(field(j, "nominal", pointer), pointer + "/nominal"),
          number_list(field(j, "deviation", pointer), pointer + "/deviation"));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), pointer);
    }
  }
  if (kind == "knapsack_soc") return KnapsackSocUncertainty{};
  fail("unknown uncertainty kind '" + kind + "'", pointer + "/kind");
}

BinaryRobustProblem binary_from(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail("expected a binary problem object", pointer);
  const int n = integer(field(j, "n", pointer), pointer + "/n");
  const json& jo = field(j, "objective", pointer);
  const std::string obj_type =
      field(jo, "type", pointer + "/objective").get<std::string>();
  AffineObjective objective;
  if (obj_type == "dot") {
    objective = dot_objective();
  } else if (obj_type == "quadratic_knapsack") {
    // 1-based variable indices in the file.
    const int i = integer(field(jo, "i", pointer + "/objective"),
                          pointer + "/objective/i");
    const int jj = integer(field(jo, "j", pointer + "/objective"),
                           pointer + "/objective/j");
    if (i < 1 || jj < 1 || i > n || jj > n || i == jj)
      fail("bad quadratic_knapsack indices", pointer + "/objective");
    objective = quadratic_knapsack_objective(i - 1, jj - 1);
  } else {
    fail("unknown objective type '" + obj_type + "'",
         pointer + "/objective/type");
  }
  BinaryUncertainty unc = binary_uncertainty_from(
      field(j, "uncertainty", pointer), pointer + "/uncertainty");

  const json& jf = field(j, "feasible", pointer);
  const std::string feas_type =
      field(jf, "type", pointer + "/feasible").get<std::string>();
  try {
    if (feas_type == "cardinality_le") {
      const int bound = integer(field(jf, "bound", pointer + "/feasible"),
                                pointer + "/feasible/bound");
      return BinaryRobustProblem::from_predicate(
          n,
          [bound](const std::vector<int>& x) {
            int total = 0;
            for (int v : x) total += v;
            return total <= bound;
          },
          std::move(objective), std::move(unc));
    }
    if (feas_type == "list") {
      BinaryRobustProblem prob;
      prob.n = n;
      prob.objective = std::move(objective);
      prob.uncertainty = std::move(unc);
      const json& jp = field(jf, "points", pointer + "/feasible");
      if (!jp.is_array()) fail("expected points array", pointer + "/feasible");
      for (size_t k = 0; k < jp.size(); ++k) {
        std::vector<int> x;
        for (const auto& v : jp[k]) x.push_back(v.get<int>());
        prob.feasible.push_back(std::move(x));
      }
      prob.validate();
      return prob;
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what(), pointer + "/feasible");
  }
  fail("unknown feasible type '" + feas_type + "'", pointer + "/feasible/type");
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("invalid JSON", "/");
  return j;
}

json payload_of(const ProblemFile& p) {
  return parse_json(p.text).at("payload");
}

}  // namespace

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::RobustSdp: return "robust_sdp";
    case ProblemKind::Eigen: return "eigen";
    case ProblemKind::Maxcut: return "maxcut";
    case ProblemKind::Binary: return "binary";
  }
  return "?";
}

ProblemFile parse_problem_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail("expected a top-level object", "/");
  const std::string version = field(j, "version", "").get<std::string>();
  if (version != "1") fail("unsupported version '" + version + "'", "/version");
  const std::string kind = field(j, "kind", "").get<std::string>();
  ProblemFile p;
  p.version = version;
  if (kind == "robust_sdp")
    p.kind = ProblemKind::RobustSdp;
  else if (kind == "eigen")
    p.kind = ProblemKind::Eigen;
  else if (kind == "maxcut")
    p.kind = ProblemKind::Maxcut;
  else if (kind == "binary")
    p.kind = ProblemKind::Binary;
  else
    fail("unknown kind '" + kind + "'", "/kind");
  const json& payload = field(j, "payload", "");
  // Validate eagerly so parse() either yields a usable file or a located
  // error.
  switch (p.kind) {
    case ProblemKind::RobustSdp: {
      RobustSdpProblem prob{
          spectrahedron_from(field(payload, "spectrahedron", "/payload"),
                             "/payload/spectrahedron"),
          box_from(field(payload, "uncertainty", "/payload"),
                   "/payload/uncertainty")};
      try {
        prob.validate();
      } catch (const std::invalid_argument& e) {
        fail(e.what(), "/payload");
      }
      break;
    }
    case ProblemKind::Eigen:
      box_from(field(payload, "uncertainty", "/payload"),
               "/payload/uncertainty");
      break;
    case ProblemKind::Maxcut:
      graph_from(payload, "/payload");
      break;
    case ProblemKind::Binary:
      binary_from(payload, "/payload");
      break;
  }
  p.text = json{{"kind", kind}, {"version", version}, {"payload", payload}}
               .dump();
  return p;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string serialize(const ProblemFile& p) { return p.text; }

RobustSdpProblem as_robust_sdp(const ProblemFile& p) {
  if (p.kind != ProblemKind::RobustSdp)
    throw std::runtime_error("problem file is not of kind robust_sdp");
  const json payload = payload_of(p);
  return {spectrahedron_from(payload.at("spectrahedron"),
                             "/payload/spectrahedron"),
          box_from(payload.at("uncertainty"), "/payload/uncertainty")};
}

EigenInstance as_eigen(const ProblemFile& p) {
  if (p.kind != ProblemKind::Eigen)
    throw std::runtime_error("problem file is not of kind eigen");
  return {box_from(payload_of(p).at("uncertainty"), "/payload/uncertainty")};
}

UncertainGraph as_graph(const ProblemFile& p) {
  if (p.kind != ProblemKind::Maxcut)
    throw std::runtime_error("problem file is not of kind maxcut");
  return graph_from(payload_of(p), "/payload");
}

BinaryRobustProblem as_binary(const ProblemFile& p) {
  if (p.kind != ProblemKind::Binary)
    throw std::runtime_error("problem file is not of kind binary");
  return binary_from(payload_of(p), "/payload");
}

std::string sym_to_json(const SymMatrix& m) { return sym_to(m).dump(); }

SymMatrix sym_from_json(const std::string& text) {
  return sym_from(parse_json(text), "/");
}

SymMatrix sym_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return sym_from_json(buf.str());
}

std::string envelope_to_json(const ResultEnvelope& env) {
  json j{{"digest", env.digest},
         {"command", env.command},
         {"parameters", parse_json(env.parameters_json)},
         {"outputs", parse_json(env.outputs_json)},
         {"wall_time_ms", env.wall_time_ms}};
  return j.dump(2);
}

std::string content_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string dump_conic_json(const ConeProgram& prog) {
  auto block_to = [](const BlockVector& b) {
    json j;
    j["psd"] = json::array();
    for (const auto& m : b.psd) j["psd"].push_back(sym_to(m));
    j["nonneg"] = b.nonneg;
    j["free"] = b.free_part;
    return j;
  };
  json j;
  j["cone"] = {{"psd_blocks", prog.cone.psd_blocks},
               {"nonneg_dim", prog.cone.nonneg_dim},
               {"free_dim", prog.cone.free_dim}};
  j["objective"] = block_to(prog.objective);
  j["rows"] = json::array();
  for (const auto& row : prog.rows)
    j["rows"].push_back({{"coeff", block_to(row.coeff)}, {"rhs", row.rhs}});
  return j.dump(2);
}

}  // namespace prosdp
