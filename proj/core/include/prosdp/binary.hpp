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

#ifndef PROSDP_BINARY_HPP
#define PROSDP_BINARY_HPP

#include <functional>
#include <variant>
#include <vector>

#include "prosdp/uncertainty.hpp"

namespace prosdp {

/// f(x, p) = fbar(x) . p + g(x).
struct AffineObjective {
  /// x in {0,1}^n  ->  (fbar(x), g(x)).
  std::function<std::pair<std::vector<double>, double>(
      const std::vector<int>&)> coeff_map;

  double value(const std::vector<int>& x, const std::vector<double>& p) const;
};

/// f(x, p) = p . x.
AffineObjective dot_objective();

/// x^T R(p) x for R(p) = ones + E_ii (p1-1) + E_jj (p1-1) + E_ij (p2-1),
/// zero-based indices i != j.
AffineObjective quadratic_knapsack_objective(int i, int j);

using BinaryUncertainty =
    std::variant<KnapsackSocUncertainty, IntervalUncertainty>;

InnerMinResult inner_min(const BinaryUncertainty& u,
                         const std::vector<double>& coeff);
std::vector<double> relint_point(const BinaryUncertainty& u);

/// Robust binary problem over an explicit feasible list; enumeration-scale
/// only (n <= 24).
struct BinaryRobustProblem {
  int n = 0;
  std::vector<std::vector<int>> feasible;
  AffineObjective objective;
  BinaryUncertainty uncertainty;

  void validate() const;
  static BinaryRobustProblem from_predicate(
      int n, const std::function<bool(const std::vector<int>&)>& pred,
      AffineObjective objective, BinaryUncertainty uncertainty);

  double worst_case_value(const std::vector<int>& x) const;
};

struct EnumerateResult {
  double value = 0.0;
  std::vector<std::vector<int>> solutions;
};

/// Exact robust optimum by enumeration.
EnumerateResult enumerate_ro(const BinaryRobustProblem& prob);

/// Does xbar Pareto dominate x (weakly better everywhere, strictly better
/// at the relint scenario)?
bool dominates(const BinaryRobustProblem& prob, const std::vector<int>& x,
               const std::vector<int>& xbar, double strict_tol = 1e-9);

struct ProPartition {
  double value = 0.0;
  std::vector<std::vector<int>> pro;
  struct Dominated {
    std::vector<int> x;
    std::vector<int> dominator;
  };
  std::vector<Dominated> dominated;
};

/// Partitions the robust-optimal set into PRO and dominated solutions with
/// dominating witnesses; exact ground truth.
ProPartition brute_force_pro(const BinaryRobustProblem& prob);

/// Exact three-condition test for dominance by a +-1 move under
/// interval uncertainty. Throws std::invalid_argument on precondition
/// violations (non-interval uncertainty, x* not robustly optimal, z or
/// x* + z not binary).
bool interval_move_dominates(const BinaryRobustProblem& prob, const std::vector<int>& x_star,
                 const std::vector<int>& z);

/// Whether the robust-optimal and PRO sets coincide; requires interval
/// uncertainty with deviation > 0 and deviation_i != nominal_i everywhere.
bool all_robust_optima_pro(const BinaryRobustProblem& prob);

}  // namespace prosdp

#endif  // PROSDP_BINARY_HPP
