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

#include "prosdp/binary.hpp"

#include <cmath>
#include <stdexcept>

namespace prosdp {

double AffineObjective::value(const std::vector<int>& x,
                              const std::vector<double>& p) const {
  const auto [fbar, g] = coeff_map(x);
  if (fbar.size() != p.size())
    throw std::invalid_argument("AffineObjective::value: p size mismatch");
  double v = g;
  for (size_t i = 0; i < p.size(); ++i) v += fbar[i] * p[i];
  return v;
}

AffineObjective dot_objective() {
  AffineObjective obj;
  obj.coeff_map = [](const std::vector<int>& x) {
    std::vector<double> f(x.begin(), x.end());
    return std::make_pair(std::move(f), 0.0);
  };
  return obj;
}

AffineObjective quadratic_knapsack_objective(int i, int j) {
  if (i == j) throw std::invalid_argument("quadratic_knapsack_objective: i == j");
  AffineObjective obj;
  obj.coeff_map = [i, j](const std::vector<int>& x) {
    double total = 0.0;
    for (int xi : x) total += xi;
    // x^T 11^T x + (p1 - 1)(x_i + x_j) + (p2 - 1) x_i x_j, with x_k^2 = x_k.
    const double diag = x[i] + x[j];
    const double cross = static_cast<double>(x[i]) * x[j];
    std::vector<double> f = {diag, cross};
    return std::make_pair(std::move(f), total * total - diag - cross);
  };
  return obj;
}

InnerMinResult inner_min(const BinaryUncertainty& u,
                         const std::vector<double>& coeff) {
  return std::visit([&](const auto& set) { return set.inner_min(coeff); }, u);
}

std::vector<double> relint_point(const BinaryUncertainty& u) {
  return std::visit([](const auto& set) { return set.relint_point(); }, u);
}

void BinaryRobustProblem::validate() const {
  if (n <= 0 || n > 24)
    throw std::invalid_argument("BinaryRobustProblem: n out of range (1..24)");
  if (feasible.empty())
    throw std::invalid_argument("BinaryRobustProblem: empty feasible set");
  if (!objective.coeff_map)
    throw std::invalid_argument("BinaryRobustProblem: missing objective");
  for (const auto& x : feasible) {
    if (static_cast<int>(x.size()) != n)
      throw std::invalid_argument("BinaryRobustProblem: point size mismatch");
    for (int v : x)
      if (v != 0 && v != 1)
        throw std::invalid_argument("BinaryRobustProblem: point not binary");
  }
}

BinaryRobustProblem BinaryRobustProblem::from_predicate(
    int n, const std::function<bool(const std::vector<int>&)>& pred,
    AffineObjective objective, BinaryUncertainty uncertainty) {
  if (n <= 0 || n > 24)
    throw std::invalid_argument("from_predicate: n out of range (1..24)");
  BinaryRobustProblem prob;
  prob.n = n;
  prob.objective = std::move(objective);
  prob.uncertainty = std::move(uncertainty);
  std::vector<int> x(n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    if (pred(x)) prob.feasible.push_back(x);
  }
  prob.validate();
  return prob;
}

double BinaryRobustProblem::worst_case_value(const std::vector<int>& x) const {
  const auto [fbar, g] = objective.coeff_map(x);
  return inner_min(uncertainty, fbar).value + g;
}

EnumerateResult enumerate_ro(const BinaryRobustProblem& prob) {
  prob.validate();
  EnumerateResult out;
  bool first = true;
  std::vector<double> values;
  values.reserve(prob.feasible.size());
  for (const auto& x : prob.feasible) {
    const double v = prob.worst_case_value(x);
    values.push_back(v);
    if (first || v > out.value) {
      out.value = v;
      first = false;
    }
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(out.value));
  for (size_t k = 0; k < prob.feasible.size(); ++k)
    if (values[k] >= out.value - tol) out.solutions.push_back(prob.feasible[k]);
  return out;
}

bool dominates(const BinaryRobustProblem& prob, const std::vector<int>& x,
               const std::vector<int>& xbar, double strict_tol) {
  const auto [fx, gx] = prob.objective.coeff_map(x);
  const auto [fb, gb] = prob.objective.coeff_map(xbar);
  // f(xbar, p) - f(x, p) >= 0 for all p iff its minimum over U is >= 0.
  std::vector<double> diff(fb.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = fb[i] - fx[i];
  const double min_gap = inner_min(prob.uncertainty, diff).value + (gb - gx);
  if (min_gap < -strict_tol) return false;
  const auto p_hat = relint_point(prob.uncertainty);
  return prob.objective.value(xbar, p_hat) - prob.objective.value(x, p_hat) >
         strict_tol;
}

ProPartition brute_force_pro(const BinaryRobustProblem& prob) {
  const EnumerateResult ro = enumerate_ro(prob);
  ProPartition out;
  out.value = ro.value;
  for (const auto& x : ro.solutions) {
    const std::vector<int>* witness = nullptr;
    for (const auto& xbar : prob.feasible) {
      if (xbar == x) continue;
      if (dominates(prob, x, xbar, 1e-9)) {
        witness = &xbar;
        break;
      }
    }
    if (witness)
      out.dominated.push_back({x, *witness});
    else
      out.pro.push_back(x);
  }
  return out;
}

namespace {

bool is_member(const std::vector<std::vector<int>>& set,
               const std::vector<int>& x) {
  for (const auto& y : set)
    if (y == x) return true;
  return false;
}

}  // namespace

bool interval_move_dominates(const BinaryRobustProblem& prob, const std::vector<int>& x_star,
                 const std::vector<int>& z) {
  prob.validate();
  const auto* interval = std::get_if<IntervalUncertainty>(&prob.uncertainty);
  if (!interval)
    throw std::invalid_argument("interval_move_dominates: uncertainty is not an interval");
  if (static_cast<int>(x_star.size()) != prob.n ||
      static_cast<int>(z.size()) != prob.n)
    throw std::invalid_argument("interval_move_dominates: size mismatch");
  std::vector<int> moved(prob.n);
  for (int i = 0; i < prob.n; ++i) {
    if (z[i] < -1 || z[i] > 1)
      throw std::invalid_argument("interval_move_dominates: z not in {-1,0,1}^n");
    moved[i] = x_star[i] + z[i];
    if (moved[i] != 0 && moved[i] != 1)
      throw std::invalid_argument("interval_move_dominates: x* + z not binary");
  }
  const EnumerateResult ro = enumerate_ro(prob);
  const double tol = 1e-9 * std::max(1.0, std::abs(ro.value));
  if (!is_member(ro.solutions, x_star) ||
      prob.worst_case_value(x_star) < ro.value - tol)
    throw std::invalid_argument("interval_move_dominates: x* is not robustly optimal");

  // Condition 1: x* + z is robustly optimal.
  if (!is_member(prob.feasible, moved)) return false;
  if (prob.worst_case_value(moved) < ro.value - tol) return false;
  // Condition 2: coordinates moved down carry no uncertainty.
  // Condition 3: some coordinate moved up does.
  bool strict = false;
  for (int i = 0; i < prob.n; ++i) {
    if (z[i] == -1 && interval->deviation()[i] > 0) return false;
    if (z[i] == 1 && interval->deviation()[i] > 0) strict = true;
  }
  return strict;
}

bool all_robust_optima_pro(const BinaryRobustProblem& prob) {
  prob.validate();
  const auto* interval = std::get_if<IntervalUncertainty>(&prob.uncertainty);
  if (!interval)
    throw std::invalid_argument(
        "all_robust_optima_pro: uncertainty is not an interval");
  for (int i = 0; i < interval->dim(); ++i) {
    if (interval->deviation()[i] <= 0)
      throw std::invalid_argument("all_robust_optima_pro: deviation must be > 0");
    if (interval->deviation()[i] == interval->nominal()[i])
      throw std::invalid_argument(
          "all_robust_optima_pro: deviation equals nominal");
  }
  return brute_force_pro(prob).dominated.empty();
}

}  // namespace prosdp
