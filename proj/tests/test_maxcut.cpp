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
#include "prosdp/maxcut.hpp"

using namespace prosdp;

namespace {

// Triangle with w12 = w13 = 4 + 2mu, w23 = 3 + mu, mu in [-1, 1].
UncertainGraph triangle_affine() {
  UncertainGraph g;
  g.kind = UncertainGraph::Kind::Affine;
  g.n = 3;
  g.mu_lo = -1.0;
  g.mu_hi = 1.0;
  g.edges = {{1, 2, 0, 0, 4.0, 2.0},
             {1, 3, 0, 0, 4.0, 2.0},
             {2, 3, 0, 0, 3.0, 1.0}};
  return g;
}

UncertainGraph triangle_certain() {
  UncertainGraph g;
  g.n = 3;
  g.edges = {{1, 2, 1.0, 0.0}, {1, 3, 1.0, 0.0}, {2, 3, 1.0, 0.0}};
  return g;
}

// Path 1-2-3; edge (2,3) weight ranges over [0, 1].
UncertainGraph path_box() {
  UncertainGraph g;
  g.n = 3;
  g.edges = {{1, 2, 1.0, 0.0}, {2, 3, 1.0, 1.0}};
  return g;
}

UncertainGraph complete_box(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> wdist(1.0, 2.0);
  UncertainGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double upper = wdist(rng);
      const double lower = 1.0;
      g.edges.push_back({i, j, upper, upper - lower});
    }
  return g;
}

Cut single_vertex_cut(int n, int v) {
  Cut c;
  c.signs.assign(n, 1);
  c.signs[v - 1] = -1;
  return c;
}

bool same_cut(const Cut& a, const Cut& b) {
  if (a.signs == b.signs) return true;
  std::vector<int> flipped = b.signs;
  for (int& s : flipped) s = -s;
  return a.signs == flipped;
}

}  // namespace

TEST_CASE("laplacian assembly pins") {
  const SymMatrix l3 = laplacian(triangle_certain(), {1.0, 1.0, 1.0});
  CHECK(l3(0, 0) == doctest::Approx(2.0));
  CHECK(l3(0, 1) == doctest::Approx(-1.0));
  CHECK(l3(1, 2) == doctest::Approx(-1.0));

  const SymMatrix le = laplacian(triangle_affine(), {4.0, 4.0, 3.0});
  CHECK(le(0, 0) == doctest::Approx(8.0));
  CHECK(le(1, 1) == doctest::Approx(7.0));
  CHECK(le(2, 2) == doctest::Approx(7.0));
  CHECK(le(0, 1) == doctest::Approx(-4.0));
  CHECK(le(1, 2) == doctest::Approx(-3.0));

  UncertainGraph single;
  single.n = 2;
  single.edges = {{1, 2, 2.0, 0.0}};
  const SymMatrix l2 = laplacian(single, {2.0});
  CHECK(l2(0, 0) == doctest::Approx(2.0));
  CHECK(l2(0, 1) == doctest::Approx(-2.0));
}

TEST_CASE("laplacian is PSD for nonnegative weights") {
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const UncertainGraph g = complete_box(rng, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(g.edges.size());
    for (size_t k = 0; k < w.size(); ++k)
      w[k] = g.edges[k].w - unit(rng) * g.edges[k].dev;
    CHECK(is_psd(laplacian(g, w), 1e-9));
  }
}

TEST_CASE("cut values on the triangle") {
  const UncertainGraph g = triangle_affine();
  const Cut c1 = single_vertex_cut(3, 1);
  // w(delta(v1)) = 8 + 4 mu.
  CHECK(cut_value(g, c1, g.weights_at({0.3})) == doctest::Approx(9.2));
  CHECK(cut_value(g, c1, g.weights_at({-1.0})) == doctest::Approx(4.0));
  const Cut c2 = single_vertex_cut(3, 2);
  CHECK(cut_value(g, c2, g.weights_at({-1.0})) == doctest::Approx(4.0));
  Cut empty;
  empty.signs = {1, 1, 1};
  CHECK(cut_value(g, empty, g.weights_at({0.0})) == doctest::Approx(0.0));
  // Quadratic-form route agrees.
  const SymMatrix l = laplacian(g, g.weights_at({0.3}));
  CHECK(0.25 * l.quad({1.0, -1.0, -1.0}) ==
        doctest::Approx(cut_value(g, c1, g.weights_at({0.3}))));
}

TEST_CASE("worst-case cut values") {
  const UncertainGraph g = triangle_affine();
  for (int v = 1; v <= 3; ++v)
    CHECK(worst_case_cut_value(g, single_vertex_cut(3, v)).value ==
          doctest::Approx(4.0));

  const UncertainGraph cert = triangle_certain();
  const Cut c = single_vertex_cut(3, 1);
  CHECK(worst_case_cut_value(cert, c).value ==
        doctest::Approx(cut_value(cert, c, cert.nominal_weights())));

  std::mt19937 rng(1);
  UncertainGraph k5;
  k5.n = 5;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) k5.edges.push_back({i, j, 2.0, 1.0});
  Cut balanced;
  balanced.signs = {1, 1, -1, -1, -1};
  CHECK(worst_case_cut_value(k5, balanced).value == doctest::Approx(6.0));
}

TEST_CASE("robust SDP relaxation pins") {
  const SdpResult certain = robust_maxcut_sdp(triangle_certain());
  CHECK(certain.value == doctest::Approx(2.25).epsilon(1e-5));
  for (int i = 0; i < 3; ++i)
    CHECK(certain.y(i, i) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(is_psd(certain.y, 1e-6));

  const SdpResult robust = robust_maxcut_sdp(triangle_affine());
  CHECK(robust.value == doctest::Approx(4.5).epsilon(1e-4));
  const MaxcutEnumeration exact = brute_force_maxcut(triangle_affine());
  CHECK(exact.value <= robust.value + 1e-6);
  CHECK(robust.value <= exact.value / 0.878 + 1e-6);

  UncertainGraph zero;
  zero.n = 2;
  zero.edges = {{1, 2, 0.0, 0.0}};
  CHECK(robust_maxcut_sdp(zero).value == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("brute force enumeration pins") {
  const MaxcutEnumeration tri = brute_force_maxcut(triangle_affine());
  CHECK(tri.value == doctest::Approx(4.0));
  REQUIRE(tri.cuts.size() == 3);
  REQUIRE(tri.pro_cuts.size() == 1);
  CHECK(same_cut(tri.pro_cuts[0], single_vertex_cut(3, 1)));

  UncertainGraph single;
  single.n = 2;
  single.edges = {{1, 2, 2.0, 1.0}};  // w in [1, 2]
  const MaxcutEnumeration se = brute_force_maxcut(single);
  CHECK(se.value == doctest::Approx(1.0));
  REQUIRE(se.cuts.size() == 1);
  CHECK(se.cuts[0].signs[0] != se.cuts[0].signs[1]);

  UncertainGraph k4;
  k4.n = 4;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) k4.edges.push_back({i, j, 1.0, 0.0});
  const MaxcutEnumeration k4e = brute_force_maxcut(k4);
  CHECK(k4e.value == doctest::Approx(4.0));
  CHECK(k4e.cuts.size() == 3);  // the balanced bipartitions
  CHECK(k4e.pro_cuts.size() == 3);  // certain weights: no strict improvement
}

TEST_CASE("relaxation sandwich on random boxes") {
  std::mt19937 rng(12);
  for (int t = 0; t < 5; ++t) {
    const UncertainGraph g = complete_box(rng, 5);
    const MaxcutEnumeration exact = brute_force_maxcut(g);
    const SdpResult sdp = robust_maxcut_sdp(g);
    CHECK(exact.value <= sdp.value + 1e-6);
    CHECK(sdp.value <= exact.value / 0.878 + 1e-6);
  }
}

TEST_CASE("PRO improvement transfers scenario-wise") {
  const UncertainGraph g = path_box();
  // Robustly optimal but dominated: separates only the certain edge.
  SymMatrix y_bar(3);
  y_bar.set(0, 0, 1.0);
  y_bar.set(1, 1, 1.0);
  y_bar.set(2, 2, 1.0);
  y_bar.set(0, 1, -1.0);
  const SymMatrix y_star = pro_improve_relaxation(g, y_bar);

  const MatrixBoxUncertainty u = weight_uncertainty(g);
  CHECK(u.inner_min(y_star).value ==
        doctest::Approx(u.inner_min(y_bar).value).epsilon(1e-6));
  bool strict = false;
  for (int s = 0; s <= 20; ++s) {
    const std::vector<double> mu = {s / 20.0};
    const double before = frobenius(u.at(mu), y_bar);
    const double after = frobenius(u.at(mu), y_star);
    CHECK(after >= before - 1e-8);
    strict = strict || after > before + 1e-4;
  }
  CHECK(strict);
  CHECK(y_star(1, 2) == doctest::Approx(-1.0).epsilon(1e-4));

  // Already PRO: returned unchanged.
  const SymMatrix again = pro_improve_relaxation(g, y_star);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      CHECK(again(i, j) == doctest::Approx(y_star(i, j)).epsilon(1e-4));

  CHECK_THROWS_AS(weight_uncertainty(triangle_certain()),
                  std::invalid_argument);
}

TEST_CASE("hyperplane rounding pins") {
  // Rank-1 Y = x x^T reproduces the cut regardless of the sample.
  const UncertainGraph g = path_box();
  const SymMatrix y = SymMatrix::outer({1.0, -1.0, 1.0});
  const GwResult r = gw_round(g, y, 50, 7);
  Cut expected;
  expected.signs = {1, -1, 1};
  CHECK(same_cut(r.best, expected));
  CHECK(r.mean_worst_case == doctest::Approx(r.best_worst_case));

  const GwResult r2 = gw_round(g, y, 50, 7);
  CHECK(r2.best.signs == r.best.signs);
  CHECK(r2.mean_worst_case == doctest::Approx(r.mean_worst_case));
}

TEST_CASE("rounding the improved triangle solution recovers the PRO cut") {
  const UncertainGraph g = triangle_affine();
  const SdpResult sdp = robust_maxcut_sdp(g);
  const SymMatrix y = pro_improve_relaxation(g, sdp.y);
  const GwResult r = gw_round(g, y, 10000, 42);
  CHECK(same_cut(r.best, single_vertex_cut(3, 1)));
  CHECK(r.best_worst_case == doctest::Approx(4.0));
  // Nominal tie-break: delta(v1) is worth 8 at mu = 0.
  CHECK(r.best_nominal == doctest::Approx(8.0));
}

TEST_CASE("graph validation") {
  UncertainGraph bad;
  bad.n = 3;
  bad.edges = {{2, 1, 1.0, 0.0}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.edges = {{1, 2, 1.0, -0.5}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.edges = {{1, 2, 1.0, 0.0}, {1, 2, 2.0, 0.0}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
