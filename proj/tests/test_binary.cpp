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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "prosdp/binary.hpp"

using namespace prosdp;

namespace {

int popcount(const std::vector<int>& x) {
  int s = 0;
  for (int v : x) s += v;
  return s;
}

// The quadratic knapsack study: n = 7, at most 5 items, uncertainty coupling
// items 1 and 2 through the SOC-bounded set.
BinaryRobustProblem knapsack_problem() {
  return BinaryRobustProblem::from_predicate(
      7, [](const std::vector<int>& x) { return popcount(x) <= 5; },
      quadratic_knapsack_objective(0, 1), KnapsackSocUncertainty{});
}

BinaryRobustProblem interval_problem(int n,
                                     std::vector<std::vector<int>> feasible,
                                     std::vector<double> nominal,
                                     std::vector<double> deviation) {
  BinaryRobustProblem prob;
  prob.n = n;
  prob.feasible = std::move(feasible);
  prob.objective = dot_objective();
  prob.uncertainty = IntervalUncertainty(std::move(nominal),
                                         std::move(deviation));
  return prob;
}

}  // namespace

TEST_CASE("quadratic knapsack objective matches the quadratic form") {
  const AffineObjective obj = quadratic_knapsack_objective(0, 1);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> pdist(0.5, 4.0);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> x(7);
    for (int& v : x) v = bit(rng);
    const std::vector<double> p = {pdist(rng), pdist(rng)};
    // x^T R(p) x with R = ones + (p1-1)(E_11+E_22) + (p2-1) E_12.
    double expected = double(popcount(x)) * popcount(x) +
                      (p[0] - 1) * (x[0] + x[1]) + (p[1] - 1) * x[0] * x[1];
    CHECK(obj.value(x, p) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("knapsack study: robust optimum") {
  const BinaryRobustProblem prob = knapsack_problem();
  CHECK(prob.feasible.size() == 120);
  const EnumerateResult ro = enumerate_ro(prob);
  CHECK(ro.value == doctest::Approx(25.0));
  CHECK(ro.solutions.size() == 21);
  for (const auto& x : ro.solutions) CHECK(popcount(x) == 5);
}

TEST_CASE("knapsack study: PRO partition") {
  const BinaryRobustProblem prob = knapsack_problem();
  const ProPartition part = brute_force_pro(prob);
  CHECK(part.value == doctest::Approx(25.0));
  CHECK(part.pro.size() == 10);
  CHECK(part.dominated.size() == 11);
  for (const auto& x : part.pro) {
    CHECK(popcount(x) == 5);
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
  }
  // At p = (2,4) the PRO solutions pay off: 30 versus 25.
  for (const auto& x : part.pro)
    CHECK(prob.objective.value(x, {2.0, 4.0}) == doctest::Approx(30.0));
  for (const auto& d : part.dominated) {
    CHECK(prob.objective.value(d.x, {2.0, 4.0}) <= 30.0 - 1e-9);
    CHECK(dominates(prob, d.x, d.dominator));
  }
  const auto worst_dominated = *std::min_element(
      part.dominated.begin(), part.dominated.end(),
      [&](const auto& a, const auto& b) {
        return prob.objective.value(a.x, {2.0, 4.0}) <
               prob.objective.value(b.x, {2.0, 4.0});
      });
  CHECK(prob.objective.value(worst_dominated.x, {2.0, 4.0}) ==
        doctest::Approx(25.0));
}

TEST_CASE("no PRO solution is dominated by any feasible point") {
  const BinaryRobustProblem prob = knapsack_problem();
  const ProPartition part = brute_force_pro(prob);
  for (const auto& x : part.pro)
    for (const auto& other : prob.feasible)
      if (other != x) CHECK_FALSE(dominates(prob, x, other));
}

TEST_CASE("enumerate_ro is order independent") {
  BinaryRobustProblem prob = interval_problem(
      2, {{1, 0}, {0, 1}}, {1.0, 1.0}, {1.0, 1.0});
  const double v1 = enumerate_ro(prob).value;
  std::reverse(prob.feasible.begin(), prob.feasible.end());
  CHECK(enumerate_ro(prob).value == doctest::Approx(v1));
  CHECK(v1 == doctest::Approx(0.0));
  CHECK(enumerate_ro(prob).solutions.size() == 2);
}

TEST_CASE("interval_move_dominates pins") {
  // Both singletons are robustly optimal at value 0.
  const BinaryRobustProblem symmetric = interval_problem(
      2, {{1, 0}, {0, 1}}, {1.0, 1.0}, {1.0, 1.0});
  CHECK_FALSE(interval_move_dominates(symmetric, {1, 0}, {-1, 1}));
  CHECK_FALSE(interval_move_dominates(symmetric, {1, 0}, {0, 0}));

  // Raising a coordinate with positive deviation while the uncertainty-free
  // part stays put is exactly the characterized move.
  const BinaryRobustProblem up = interval_problem(
      2, {{1, 0}, {1, 1}}, {1.0, 1.0}, {0.0, 1.0});
  CHECK(interval_move_dominates(up, {1, 0}, {0, 1}));
  CHECK(dominates(up, {1, 0}, {1, 1}));

  CHECK_THROWS_AS(interval_move_dominates(symmetric, {1, 1}, {0, 0}),
                  std::invalid_argument);  // x* not feasible/robust optimal
  CHECK_THROWS_AS(interval_move_dominates(symmetric, {1, 0}, {2, 0}),
                  std::invalid_argument);  // z outside {-1,0,1}
  CHECK_THROWS_AS(interval_move_dominates(symmetric, {1, 0}, {1, 0}),
                  std::invalid_argument);  // x* + z not binary
  BinaryRobustProblem soc = knapsack_problem();
  CHECK_THROWS_AS(interval_move_dominates(soc, soc.feasible.front(), {0, 0, 0, 0, 0, 0, 0}),
                  std::invalid_argument);  // not interval uncertainty
}

TEST_CASE("interval_move_dominates agrees with brute-force dominance") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> ndist(2, 8), bit(0, 1);
  std::uniform_real_distribution<double> pdist(0.2, 2.0), unit(0.0, 1.0);
  int admissible_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = ndist(rng);
    std::vector<double> nominal(n), deviation(n);
    for (int i = 0; i < n; ++i) {
      nominal[i] = pdist(rng);
      // Mix of certain and uncertain coordinates.
      deviation[i] = unit(rng) < 0.35 ? 0.0 : unit(rng) * nominal[i];
    }
    if (*std::max_element(deviation.begin(), deviation.end()) == 0.0)
      deviation[0] = 0.5 * nominal[0];

    std::vector<std::vector<int>> feasible;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (unit(rng) > 0.4) continue;
      std::vector<int> x(n);
      for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
      feasible.push_back(std::move(x));
    }
    if (feasible.empty()) feasible.push_back(std::vector<int>(n, 0));

    const BinaryRobustProblem prob =
        interval_problem(n, feasible, nominal, deviation);
    const EnumerateResult ro = enumerate_ro(prob);
    for (const auto& x_star : ro.solutions)
      for (const auto& xbar : prob.feasible) {
        if (xbar == x_star) continue;
        std::vector<int> z(n);
        for (int i = 0; i < n; ++i) z[i] = xbar[i] - x_star[i];
        ++admissible_pairs;
        CHECK(interval_move_dominates(prob, x_star, z) == dominates(prob, x_star, xbar));
      }
  }
  CHECK(admissible_pairs > 1000);
}

TEST_CASE("RO and PRO coincide under strict interval deviations") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> ndist(2, 8);
  std::uniform_real_distribution<double> pdist(0.5, 2.0), unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const int n = ndist(rng);
    std::vector<double> nominal(n), deviation(n);
    for (int i = 0; i < n; ++i) {
      nominal[i] = pdist(rng);
      // Strictly interior: 0 < deviation < nominal.
      deviation[i] = (0.1 + 0.8 * unit(rng)) * nominal[i];
    }
    std::vector<std::vector<int>> feasible;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (unit(rng) > 0.4) continue;
      std::vector<int> x(n);
      for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
      feasible.push_back(std::move(x));
    }
    if (feasible.empty()) feasible.push_back(std::vector<int>(n, 0));
    CHECK(all_robust_optima_pro(interval_problem(n, feasible, nominal, deviation)));
  }
}

TEST_CASE("coincidence check rejects degenerate deviations") {
  // deviation == nominal admits strict-superset dominance.
  const BinaryRobustProblem prob = interval_problem(
      2, {{1, 0}, {1, 1}}, {1.0, 1.0}, {1.0, 1.0});
  CHECK_THROWS_AS(all_robust_optima_pro(prob), std::invalid_argument);
  const ProPartition part = brute_force_pro(prob);
  CHECK(part.value == doctest::Approx(0.0));
  REQUIRE(part.dominated.size() == 1);
  CHECK(part.dominated[0].x == std::vector<int>{1, 0});
  CHECK(part.pro.size() == 1);
}

TEST_CASE("singleton feasible set is PRO") {
  const BinaryRobustProblem prob =
      interval_problem(2, {{1, 1}}, {1.0, 1.0}, {0.5, 0.5});
  const ProPartition part = brute_force_pro(prob);
  CHECK(part.pro.size() == 1);
  CHECK(part.dominated.empty());
}

TEST_CASE("size and validity guards") {
  CHECK_THROWS_AS(BinaryRobustProblem::from_predicate(
                      25, [](const std::vector<int>&) { return true; },
                      dot_objective(), KnapsackSocUncertainty{}),
                  std::invalid_argument);
  BinaryRobustProblem bad = interval_problem(2, {{1, 2}}, {1, 1}, {1, 1});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
