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

#ifndef PROSDP_IO_HPP
#define PROSDP_IO_HPP

#include <stdexcept>
#include <string>

#include "prosdp/binary.hpp"
#include "prosdp/conic.hpp"
#include "prosdp/eigenvalue.hpp"
#include "prosdp/maxcut.hpp"
#include "prosdp/pro.hpp"

namespace prosdp {

/// Schema violation with the JSON-pointer location of the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string pointer)
      : std::runtime_error(message + " (at " + pointer + ")"),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

enum class ProblemKind { RobustSdp, Eigen, Maxcut, Binary };

const char* to_string(ProblemKind k);

/// A validated problem file. `text` is the canonicalized JSON of the whole
/// file; typed views are built on demand so round-tripping is exact.
struct ProblemFile {
  ProblemKind kind = ProblemKind::RobustSdp;
  std::string version;
  std::string text;

  bool operator==(const ProblemFile&) const = default;
};

ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);
/// Canonical JSON; parse_problem_text(serialize(p)) == p.
std::string serialize(const ProblemFile& p);

RobustSdpProblem as_robust_sdp(const ProblemFile& p);
EigenInstance as_eigen(const ProblemFile& p);
UncertainGraph as_graph(const ProblemFile& p);
BinaryRobustProblem as_binary(const ProblemFile& p);

std::string sym_to_json(const SymMatrix& m);
SymMatrix sym_from_json(const std::string& text);
SymMatrix sym_from_file(const std::string& path);

struct ResultEnvelope {
  std::string digest;
  std::string command;
  std::string parameters_json = "{}";
  std::string outputs_json = "{}";
  double wall_time_ms = 0.0;
};

std::string envelope_to_json(const ResultEnvelope& env);

/// FNV-1a 64-bit hex digest of the exact input text.
std::string content_digest(const std::string& text);

/// Debug dump of an assembled conic program (--dump-conic).
std::string dump_conic_json(const ConeProgram& prog);

}  // namespace prosdp

#endif  // PROSDP_IO_HPP
