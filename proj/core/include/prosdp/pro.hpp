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

#ifndef PROSDP_PRO_HPP
#define PROSDP_PRO_HPP

#include <optional>
#include <utility>
#include <vector>

#include "prosdp/conic.hpp"
#include "prosdp/sym_matrix.hpp"
#include "prosdp/uncertainty.hpp"

namespace prosdp {

/// {X >= 0 : <A_j, X> = b_j}.
struct Spectrahedron {
  struct Row {
    SymMatrix lhs;
    double rhs;
  };
  std::vector<Row> rows;

  int dim() const;
  void validate() const;
  /// {X >= 0 : Tr(X) = 1}.
  static Spectrahedron unit_trace(int n);
};

/// max over the spectrahedron of the worst-case pairing <P, X> over a
/// matrix-box uncertainty set.
struct RobustSdpProblem {
  Spectrahedron feasible;
  MatrixBoxUncertainty uncertainty;

  void validate() const;
};

enum class ParetoStatus { Pro, Dominated };

struct ParetoVerdict {
  ParetoStatus status = ParetoStatus::Pro;
  /// Improvement direction Z in U* with X + Z feasible (Dominated only).
  std::optional<SymMatrix> direction;
  /// <P_hat, Z> at the relative-interior scenario.
  double nominal_gain = 0.0;
  /// mu coordinates of a scenario with strict improvement (the relint point).
  std::optional<std::vector<double>> certificate_scenario;
  /// Threshold used for the strict-improvement decision.
  double strict_tol = 0.0;
};

struct RobustSolution {
  SymMatrix x;
  double value;
  ConicSolution raw;
};

struct AllProResult {
  bool all_pro = false;
  double value = 0.0;
  /// (dominated X, dominating Y) when not all PRO.
  std::optional<std::pair<SymMatrix, SymMatrix>> witness;
};

struct ProOptions {
  SolverOptions solver;
  /// Slack allowed when describing the robust-optimal set by value.
  double eq_tol = 1e-6;
};

/// Thrown when a solver status other than Optimal propagates.
class SolveError : public std::runtime_error {
 public:
  SolveError(SolveStatus status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  SolveStatus status() const { return status_; }

 private:
  SolveStatus status_;
};

double strict_tol_for(double nominal_objective);

/// The dualized robust counterpart as an explicit conic program: the inner
/// minimization over the mu box becomes 2N auxiliary nonnegative variables.
ConeProgram robust_counterpart(const RobustSdpProblem& prob);

/// Solves the robust counterpart.
RobustSolution solve_robust(const RobustSdpProblem& prob,
                            const ProOptions& opts = {});

/// Decides Pareto robust optimality of a robustly optimal X by maximizing
/// <P_hat, Z> over Z in U* with X + Z feasible. Throws std::invalid_argument
/// when X is not robustly optimal.
ParetoVerdict verify_pro(const RobustSdpProblem& prob, const SymMatrix& x,
                         const ProOptions& opts = {});

/// X + Z* for the optimal improvement direction; returns X unchanged when it
/// is already PRO.
SymMatrix improve_to_pro(const RobustSdpProblem& prob, const SymMatrix& x,
                         const ProOptions& opts = {});

/// Maximizes the relint-scenario objective over the robust-optimal set.
SymMatrix pro_via_reopt(const RobustSdpProblem& prob,
                        const ProOptions& opts = {});

/// Decides whether every robustly optimal solution is PRO.
AllProResult check_all_pro(const RobustSdpProblem& prob,
                           const ProOptions& opts = {});

}  // namespace prosdp

#endif  // PROSDP_PRO_HPP
