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

#include "prosdp/eigenvalue.hpp"

#include <algorithm>
#include <stdexcept>

namespace prosdp {

RobustSdpProblem EigenInstance::to_problem() const {
  return {Spectrahedron::unit_trace(uncertainty.dim()), uncertainty};
}

NominalEigResult nominal_lambda_max(const SymMatrix& c,
                                    const SolverOptions& opts) {
  const int n = c.dim();
  NominalEigResult out{0.0, SymMatrix(n), 0.0};

  ConeProgram primal;
  primal.cone.psd_blocks = {n};
  primal.objective = BlockVector::zero(primal.cone);
  primal.objective.psd[0] = c;
  ConstraintRow trace_row{BlockVector::zero(primal.cone), 1.0};
  trace_row.coeff.psd[0] = SymMatrix::identity(n);
  primal.rows.push_back(std::move(trace_row));
  const ConicSolution psol = solve(primal, opts);
  if (psol.status != SolveStatus::Optimal)
    throw SolveError(psol.status, "nominal_lambda_max: primal solve failed: " +
                                      std::string(to_string(psol.status)));
  out.value = psol.objective_value;
  out.x = psol.primal.psd[0];

  // Dual bound: min y with y I - C >= 0, i.e. max -y over S = y I - C.
  ConeProgram dual;
  dual.cone.psd_blocks = {n};
  dual.cone.free_dim = 1;
  dual.objective = BlockVector::zero(dual.cone);
  dual.objective.free_part[0] = -1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ConstraintRow row{BlockVector::zero(dual.cone), -c(i, j)};
      row.coeff.psd[0] = SymMatrix::basis(n, i, j);
      row.coeff.free_part[0] = i == j ? -1.0 : 0.0;
      dual.rows.push_back(std::move(row));
    }
  const ConicSolution dsol = solve(dual, opts);
  if (dsol.status != SolveStatus::Optimal)
    throw SolveError(dsol.status, "nominal_lambda_max: dual solve failed: " +
                                      std::string(to_string(dsol.status)));
  out.dual_value = -dsol.objective_value;
  return out;
}

RobustEigResult robust_lambda_max(const EigenInstance& inst,
                                  const ProOptions& opts) {
  const RobustSolution sol = solve_robust(inst.to_problem(), opts);
  return {sol.value, sol.x};
}

std::vector<std::vector<double>> mu_grid(const MatrixBoxUncertainty& u,
                                         int points_per_axis) {
  if (points_per_axis < 2)
    throw std::invalid_argument("mu_grid: need at least 2 points per axis");
  const int n = u.direction_count();
  const int gridded = std::min(n, 3);
  const std::vector<double> mid = u.mu_mid();
  std::vector<std::vector<double>> grid;
  std::vector<int> idx(gridded, 0);
  while (true) {
    std::vector<double> mu = mid;
    for (int a = 0; a < gridded; ++a) {
      const double t = static_cast<double>(idx[a]) / (points_per_axis - 1);
      mu[a] = u.lo()[a] + t * (u.hi()[a] - u.lo()[a]);
    }
    grid.push_back(std::move(mu));
    int a = 0;
    for (; a < gridded; ++a) {
      if (++idx[a] < points_per_axis) break;
      idx[a] = 0;
    }
    if (a == gridded) break;
  }
  return grid;
}

ProEigReport robust_lambda_max_pro(const EigenInstance& inst,
                                   const SymMatrix& x_ro, int points_per_axis,
                                   const ProOptions& opts) {
  const RobustSdpProblem prob = inst.to_problem();
  ProEigReport out{SymMatrix(x_ro.dim()), 0.0, {}, std::nullopt};
  out.x_pro = improve_to_pro(prob, x_ro, opts);
  out.robust_value = inst.uncertainty.inner_min(out.x_pro).value;
  for (auto& mu : mu_grid(inst.uncertainty, points_per_axis)) {
    const SymMatrix c = inst.uncertainty.at(mu);
    GridPoint pt;
    pt.input_value = frobenius(c, x_ro);
    pt.output_value = frobenius(c, out.x_pro);
    pt.mu = std::move(mu);
    out.grid.push_back(std::move(pt));
  }
  const EigDecomposition eig = sym_eig(out.x_pro);
  if (!eig.eigenvalues.empty() && eig.eigenvalues[0] >= 1.0 - 1e-6)
    out.eigenvector = eig.eigenvectors[0];
  return out;
}

}  // namespace prosdp
