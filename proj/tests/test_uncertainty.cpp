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
#include "prosdp/uncertainty.hpp"

using namespace prosdp;

namespace {

SymMatrix two_by_two(double a, double b, double d) {
  SymMatrix m(2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 1, d);
  return m;
}

// C(mu) = I + mu [[1,-1],[-1,1]], mu in [0,1].
MatrixBoxUncertainty example_box() {
  return MatrixBoxUncertainty(SymMatrix::identity(2),
                              {two_by_two(1, -1, 1)}, {0.0}, {1.0});
}

SymMatrix random_sym(std::mt19937& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
  return m;
}

}  // namespace

TEST_CASE("matrix box construction rules") {
  CHECK_THROWS_AS(MatrixBoxUncertainty(SymMatrix::identity(2),
                                       {two_by_two(1, 0, 0)}, {0.5}, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MatrixBoxUncertainty(SymMatrix::identity(2),
                                       {two_by_two(1, 0, 0)}, {1.0}, {0.0}),
                  std::invalid_argument);
  // Fixed coordinates fold into the base.
  MatrixBoxUncertainty u(SymMatrix::identity(2),
                         {two_by_two(1, 0, 0), two_by_two(0, 0, 1)},
                         {2.0, 0.0}, {2.0, 1.0});
  CHECK(u.direction_count() == 1);
  CHECK(u.base()(0, 0) == doctest::Approx(3.0));
}

TEST_CASE("relint points") {
  const SymMatrix p_hat = example_box().relint_point();
  CHECK(p_hat(0, 0) == doctest::Approx(1.5));
  CHECK(p_hat(0, 1) == doctest::Approx(-0.5));
  CHECK(p_hat(1, 1) == doctest::Approx(1.5));

  const IntervalUncertainty iv({1.0, 1.0}, {1.0, 0.0});
  const auto p = iv.relint_point();
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(1.0));

  const KnapsackSocUncertainty ks;
  const auto q = ks.relint_point();
  CHECK(q[0] > 1.0);
  CHECK(q[0] * q[0] < q[1]);
  CHECK(q[1] < 4.0);
}

TEST_CASE("inner_min closed forms") {
  const MatrixBoxUncertainty box = example_box();
  SymMatrix half_id = SymMatrix::identity(2);
  half_id *= 0.5;
  const InnerMinResult r = box.inner_min(half_id);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.minimizer[0] == doctest::Approx(0.0));  // mu = 0 is the worst case

  const IntervalUncertainty iv({4.0, 3.0}, {2.0, 1.0});
  const InnerMinResult ri = iv.inner_min({1.0, 1.0});
  CHECK(ri.value == doctest::Approx(4.0));
  CHECK(ri.minimizer[0] == doctest::Approx(2.0));
  CHECK(ri.minimizer[1] == doctest::Approx(2.0));

  const KnapsackSocUncertainty ks;
  const InnerMinResult rk = ks.inner_min({2.0, 3.0});
  CHECK(rk.minimizer[0] == doctest::Approx(1.0));
  CHECK(rk.minimizer[1] == doctest::Approx(1.0));
  CHECK(rk.value == doctest::Approx(5.0));
}

TEST_CASE("knapsack set inner_min scans the boundary") {
  const KnapsackSocUncertainty ks;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const std::vector<double> c = {dist(rng), dist(rng)};
    const InnerMinResult r = ks.inner_min(c);
    CHECK(KnapsackSocUncertainty::contains(r.minimizer[0], r.minimizer[1]));
    // Fine sample of the feasible region never beats the closed form.
    for (int a = 0; a <= 60; ++a)
      for (int b = 0; b <= 60; ++b) {
        const double p1 = 1.0 + a / 60.0;
        const double p2 = 1.0 + 3.0 * b / 60.0;
        if (!KnapsackSocUncertainty::contains(p1, p2)) continue;
        CHECK(c[0] * p1 + c[1] * p2 >= r.value - 1e-9);
      }
  }
}

TEST_CASE("matrix box inner_min matches grid search") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> bdist(-1.5, 1.5);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + t % 3;
    const int nd = 1 + t % 3;
    std::vector<SymMatrix> dirs;
    std::vector<double> lo, hi;
    for (int i = 0; i < nd; ++i) {
      dirs.push_back(random_sym(rng, n));
      const double a = bdist(rng), b = bdist(rng);
      lo.push_back(std::min(a, b));
      hi.push_back(std::max(a, b) + 0.1);
    }
    const MatrixBoxUncertainty u(random_sym(rng, n), dirs, lo, hi);
    const SymMatrix x = random_sym(rng, n);
    const InnerMinResult r = u.inner_min(x);

    const int steps = nd == 3 ? 20 : 101;
    double best = 1e100;
    std::vector<int> idx(nd, 0);
    while (true) {
      std::vector<double> mu(nd);
      for (int i = 0; i < nd; ++i)
        mu[i] = u.lo()[i] +
                (u.hi()[i] - u.lo()[i]) * idx[i] / double(steps - 1);
      best = std::min(best, frobenius(u.at(mu), x));
      int i = 0;
      for (; i < nd; ++i) {
        if (++idx[i] < steps) break;
        idx[i] = 0;
      }
      if (i == nd) break;
    }
    CHECK(std::abs(best - r.value) <= 1e-9 * std::max(1.0, std::abs(best)));
  }
}

TEST_CASE("dual cone row shapes") {
  const DualConeRows rows = dual_cone_rows(example_box());
  CHECK(rows.aux_nonneg == 2);
  REQUIRE(rows.rows.size() == 2);
  CHECK(rows.rows[0].sense == DualConeRow::Sense::Eq);
  CHECK(rows.rows[1].sense == DualConeRow::Sense::Ge);

  const IntervalUncertainty iv({1.0, 1.0}, {1.0, 0.0});
  const DualConeRows ir = dual_cone_rows(iv);
  CHECK(ir.aux_nonneg == 2);
  CHECK(ir.rows.size() == 3);
}

TEST_CASE("dual cone membership pins") {
  // Z = X' - I/2 for the two-by-two example: <P(mu), Z> = mu >= 0.
  SymMatrix z = two_by_two(0, -0.5, 0);
  CHECK(dual_cone_certificate(example_box(), z, 1e-12).has_value());
  SymMatrix neg = two_by_two(-0.1, 0, -0.1);
  CHECK_FALSE(dual_cone_certificate(example_box(), neg, 1e-9).has_value());

  const IntervalUncertainty iv({1.0, 1.0}, {1.0, 0.0});
  CHECK(dual_cone_certificate(iv, {0.0, 0.0}, 1e-12).has_value());
  CHECK(dual_cone_certificate(iv, {-1.0, 1.0}, 1e-12).has_value());
  CHECK_FALSE(dual_cone_certificate(iv, {-1.0, 0.5}, 1e-9).has_value());
}

TEST_CASE("dual cone certificates agree with inner_min") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> bdist(-1.0, 1.0);
  int member_count = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    const int nd = 1 + t % 3;
    std::vector<SymMatrix> dirs;
    std::vector<double> lo, hi;
    for (int i = 0; i < nd; ++i) {
      dirs.push_back(random_sym(rng, n));
      const double a = bdist(rng), b = bdist(rng);
      lo.push_back(std::min(a, b));
      hi.push_back(std::max(a, b) + 0.05);
    }
    const MatrixBoxUncertainty u(random_sym(rng, n), dirs, lo, hi);
    const SymMatrix z = random_sym(rng, n);
    const double min_val = u.inner_min(z).value;
    const auto cert = dual_cone_certificate(u, z, 0.0);
    if (cert) {
      ++member_count;
      CHECK(min_val >= -1e-8);
    }
    if (min_val >= 1e-6) CHECK(cert.has_value());
  }
  CHECK(member_count > 0);
}
