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

#include <cmath>
#include <random>

#include "doctest.h"
#include "prosdp/pro.hpp"

using namespace prosdp;

namespace {

SymMatrix two_by_two(double a, double b, double d) {
  SymMatrix m(2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 1, d);
  return m;
}

// C(mu) = I + mu [[1,-1],[-1,1]], mu in [0,1], over the unit-trace
// spectrahedron. Every feasible X is robustly optimal with value 1.
RobustSdpProblem example_problem() {
  return {Spectrahedron::unit_trace(2),
          MatrixBoxUncertainty(SymMatrix::identity(2),
                               {two_by_two(1, -1, 1)}, {0.0}, {1.0})};
}

SymMatrix x_prime() { return two_by_two(0.5, -0.5, 0.5); }

SymMatrix half_identity() { return two_by_two(0.5, 0.0, 0.5); }

SymMatrix random_sym(std::mt19937& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
  return m;
}

RobustSdpProblem random_problem(std::mt19937& rng) {
  std::uniform_int_distribution<int> ndist(2, 6), kdist(1, 3);
  std::uniform_real_distribution<double> bdist(-1.0, 1.0);
  const int n = ndist(rng);
  const int nd = kdist(rng);
  std::vector<SymMatrix> dirs;
  std::vector<double> lo, hi;
  for (int i = 0; i < nd; ++i) {
    dirs.push_back(random_sym(rng, n, 0.5));
    const double a = bdist(rng), b = bdist(rng);
    lo.push_back(std::min(a, b));
    hi.push_back(std::max(a, b) + 0.1);
  }
  return {Spectrahedron::unit_trace(n),
          MatrixBoxUncertainty(random_sym(rng, n), dirs, lo, hi)};
}

}  // namespace

TEST_CASE("robust solve pins the worst-case optimum") {
  const RobustSolution sol = solve_robust(example_problem());
  CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sol.x.trace() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(is_psd(sol.x, 1e-6));
}

TEST_CASE("robust solve on a shifted diagonal box") {
  // P(mu) = diag(5,1) + mu E_11, mu in [-1,0]: worst case diag(4,1).
  const RobustSdpProblem prob{
      Spectrahedron::unit_trace(2),
      MatrixBoxUncertainty(SymMatrix::diag({5, 1}), {two_by_two(1, 0, 0)},
                           {-1.0}, {0.0})};
  const RobustSolution sol = solve_robust(prob);
  CHECK(sol.value == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(sol.x(0, 0) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("verify_pro accepts the undominated solution") {
  const ParetoVerdict v = verify_pro(example_problem(), x_prime());
  CHECK(v.status == ParetoStatus::Pro);
  CHECK(std::abs(v.nominal_gain) <= 1e-6);
  CHECK(v.nominal_gain >= -1e-9);  // Z = 0 is always feasible
}

TEST_CASE("verify_pro rejects the dominated center") {
  const ParetoVerdict v = verify_pro(example_problem(), half_identity());
  REQUIRE(v.status == ParetoStatus::Dominated);
  // <C(0.5), X' - I/2> = 2 - 1.5.
  CHECK(v.nominal_gain == doctest::Approx(0.5).epsilon(1e-5));
  REQUIRE(v.direction.has_value());
  REQUIRE(v.certificate_scenario.has_value());
  CHECK((*v.certificate_scenario)[0] == doctest::Approx(0.5));
  const SymMatrix moved = half_identity() + *v.direction;
  CHECK(moved(0, 1) == doctest::Approx(-0.5).epsilon(1e-4));
}

TEST_CASE("verify_pro rejects candidates outside the robust-optimal set") {
  const RobustSdpProblem prob{
      Spectrahedron::unit_trace(2),
      MatrixBoxUncertainty(SymMatrix::diag({5, 1}), {two_by_two(1, 0, 0)},
                           {-1.0}, {0.0})};
  CHECK_THROWS_AS(verify_pro(prob, SymMatrix::diag({0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_pro(prob, two_by_two(1.0, 2.0, 1.0)),
                  std::invalid_argument);  // not PSD
  CHECK_THROWS_AS(verify_pro(prob, SymMatrix::diag({2, 0})),
                  std::invalid_argument);  // trace 2 infeasible
}

TEST_CASE("improve_to_pro reaches the dominating solution") {
  const SymMatrix improved = improve_to_pro(example_problem(), half_identity());
  CHECK(improved(0, 0) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(improved(0, 1) == doctest::Approx(-0.5).epsilon(1e-5));
  CHECK(improved(1, 1) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(verify_pro(example_problem(), improved).status == ParetoStatus::Pro);

  const SymMatrix fixed = improve_to_pro(example_problem(), x_prime());
  CHECK(fixed(0, 1) == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("pro_via_reopt maximizes the relint objective") {
  const SymMatrix x = pro_via_reopt(example_problem());
  const SymMatrix p_hat = example_problem().uncertainty.relint_point();
  CHECK(frobenius(p_hat, x) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(verify_pro(example_problem(), x).status == ParetoStatus::Pro);
}

TEST_CASE("check_all_pro splits the two-by-two example") {
  const AllProResult r = check_all_pro(example_problem());
  CHECK_FALSE(r.all_pro);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-4));
  REQUIRE(r.witness.has_value());
  const auto& [dominated, dominating] = *r.witness;
  const SymMatrix p_hat = example_problem().uncertainty.relint_point();
  CHECK(frobenius(p_hat, dominating) - frobenius(p_hat, dominated) ==
        doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("check_all_pro accepts a uniformly shifting box") {
  // P(mu) = diag(2,1) + mu I on unit trace: <P(mu),X> = <P_0,X> + mu, so no
  // solution can dominate another.
  const RobustSdpProblem prob{
      Spectrahedron::unit_trace(2),
      MatrixBoxUncertainty(SymMatrix::diag({2, 1}), {SymMatrix::identity(2)},
                           {0.0}, {1.0})};
  const AllProResult r = check_all_pro(prob);
  CHECK(r.all_pro);
  CHECK(std::abs(r.value) <= 1e-5);
}

TEST_CASE("improvement suite on random bounded instances") {
  std::mt19937 rng(314);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 12; ++t) {
    const RobustSdpProblem prob = random_problem(rng);
    const RobustSolution sol = solve_robust(prob);
    const SymMatrix improved = improve_to_pro(prob, sol.x);

    const ParetoVerdict v = verify_pro(prob, improved);
    CHECK(v.status == ParetoStatus::Pro);
    CHECK(std::abs(prob.uncertainty.inner_min(improved).value - sol.value) <=
          1e-6 * std::max(1.0, std::abs(sol.value)));

    // The move is scenario-wise non-decreasing across the mu box.
    const SymMatrix z = improved - sol.x;
    const int nd = prob.uncertainty.direction_count();
    for (int s = 0; s < 1000; ++s) {
      std::vector<double> mu(nd);
      for (int i = 0; i < nd; ++i)
        mu[i] = prob.uncertainty.lo()[i] +
                unit(rng) * (prob.uncertainty.hi()[i] - prob.uncertainty.lo()[i]);
      CHECK(frobenius(prob.uncertainty.at(mu), z) >= -1e-8);
    }

    // Reoptimization bounds the improvement route from above.
    const SymMatrix reopt = pro_via_reopt(prob);
    const SymMatrix p_hat = prob.uncertainty.relint_point();
    CHECK(frobenius(p_hat, improved) <= frobenius(p_hat, reopt) + 1e-5);
    CHECK(verify_pro(prob, reopt).status == ParetoStatus::Pro);
  }
}
