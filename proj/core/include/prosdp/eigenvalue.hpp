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

#ifndef PROSDP_EIGENVALUE_HPP
#define PROSDP_EIGENVALUE_HPP

#include <optional>
#include <vector>

#include "prosdp/pro.hpp"
#include "prosdp/sym_matrix.hpp"
#include "prosdp/uncertainty.hpp"

namespace prosdp {

/// Robust largest-eigenvalue instance: the matrix ranges over a box, the
/// feasible set is the unit-trace spectrahedron.
struct EigenInstance {
  MatrixBoxUncertainty uncertainty;

  RobustSdpProblem to_problem() const;
};

struct NominalEigResult {
  double value = 0.0;
  SymMatrix x;
  /// Optimum of min y s.t. y I - C >= 0; equals value up to solver tolerance.
  double dual_value = 0.0;
};

/// lambda_max(c) as an SDP, solved both as max <C, X> over the unit-trace
/// spectrahedron and through the dual bound formulation.
NominalEigResult nominal_lambda_max(const SymMatrix& c,
                                    const SolverOptions& opts = {});

struct RobustEigResult {
  double value = 0.0;
  SymMatrix x;
};

RobustEigResult robust_lambda_max(const EigenInstance& inst,
                                  const ProOptions& opts = {});

struct GridPoint {
  std::vector<double> mu;
  double input_value = 0.0;
  double output_value = 0.0;
};

struct ProEigReport {
  SymMatrix x_pro;
  double robust_value = 0.0;
  /// <C(mu), X> for input and improved output over a scenario grid.
  std::vector<GridPoint> grid;
  /// Top eigenvector when the improved X is certifiably rank one
  /// (lambda_top >= 1 - 1e-6).
  std::optional<std::vector<double>> eigenvector;
};

/// Improves a robustly optimal X to a Pareto robustly optimal one and
/// reports both solutions across a mu grid (points_per_axis per coordinate,
/// at most 3 uncertain coordinates gridded).
ProEigReport robust_lambda_max_pro(const EigenInstance& inst,
                                   const SymMatrix& x_ro,
                                   int points_per_axis = 21,
                                   const ProOptions& opts = {});

/// The scenario grid used by the report: full product grid over min(N, 3)
/// coordinates, remaining coordinates fixed at the box midpoint.
std::vector<std::vector<double>> mu_grid(const MatrixBoxUncertainty& u,
                                         int points_per_axis);

}  // namespace prosdp

#endif  // PROSDP_EIGENVALUE_HPP
