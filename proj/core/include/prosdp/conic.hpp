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

#ifndef PROSDP_CONIC_HPP
#define PROSDP_CONIC_HPP

#include <optional>
#include <vector>

#include "prosdp/sym_matrix.hpp"

namespace prosdp {

/// Product cone: PSD blocks x nonnegative orthant x free scalars.
struct ConeSpec {
  std::vector<int> psd_blocks;
  int nonneg_dim = 0;
  int free_dim = 0;

  int variable_count() const;
  void validate() const;
};

/// One coefficient object per block of a ConeSpec.
struct BlockVector {
  std::vector<SymMatrix> psd;
  std::vector<double> nonneg;
  std::vector<double> free_part;

  static BlockVector zero(const ConeSpec& cone);
};

/// Frobenius/dot pairing of two block vectors over the same cone.
double block_dot(const BlockVector& a, const BlockVector& b);

struct ConstraintRow {
  BlockVector coeff;
  double rhs = 0.0;
};

/// Equality-form conic program, sense: maximize.
///
///   max  <objective, x>
///   s.t. <row.coeff, x> = row.rhs  for every row
///        x in cone
///
/// Inequalities are expressed by the caller through explicit nonnegative
/// slack variables.
struct ConeProgram {
  ConeSpec cone;
  BlockVector objective;
  std::vector<ConstraintRow> rows;

  void validate() const;
};

enum class SolveStatus {
  Optimal,
  PrimalInfeasible,
  DualInfeasible,
  NumericalFailure,
};

const char* to_string(SolveStatus s);

struct ConicSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  BlockVector primal;
  /// One multiplier per input constraint row (dropped dependent rows get 0).
  std::vector<double> dual;
  double objective_value = 0.0;
  /// b^T y; a rigorous bound on the optimum whenever dual_residual is small,
  /// and the sharper value estimate on programs without a strictly feasible
  /// point (there the primal objective absorbs rp^T y noise).
  double dual_objective_value = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  /// Farkas-type ray for the infeasible statuses: the dual multipliers for
  /// PrimalInfeasible, the flattened primal ray for DualInfeasible.
  std::vector<double> certificate;
};

struct SolverOptions {
  double gap_tol = 1e-8;
  double feas_tol = 1e-8;
  int iter_cap = 200;
  bool verbose = false;
};

/// Primal-dual path-following interior-point solve with Nesterov-Todd
/// scaling and Mehrotra predictor-corrector steps. Dense normal equations;
/// intended for small instances (PSD blocks up to ~50).
ConicSolution solve(const ConeProgram& prog, const SolverOptions& opts = {});

}  // namespace prosdp

#endif  // PROSDP_CONIC_HPP
