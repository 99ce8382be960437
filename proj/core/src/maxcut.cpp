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

#include "prosdp/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace prosdp {

void UncertainGraph::validate() const {
  if (n <= 0) throw std::invalid_argument("UncertainGraph: n must be positive");
  if (kind == Kind::Affine && mu_lo > mu_hi)
    throw std::invalid_argument("UncertainGraph: mu_lo > mu_hi");
  std::vector<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.i < 1 || e.j > n || e.i >= e.j)
      throw std::invalid_argument("UncertainGraph: bad edge endpoints");
    if (kind == Kind::Box && e.dev < 0)
      throw std::invalid_argument("UncertainGraph: negative deviation");
    const auto key = std::make_pair(e.i, e.j);
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw std::invalid_argument("UncertainGraph: duplicate edge");
    seen.push_back(key);
  }
}

bool UncertainGraph::singleton() const {
  if (kind == Kind::Affine) {
    if (mu_lo == mu_hi) return true;
    for (const auto& e : edges)
      if (e.w_mu != 0) return false;
    return true;
  }
  for (const auto& e : edges)
    if (e.dev > 0) return false;
  return true;
}

std::vector<double> UncertainGraph::nominal_weights() const {
  std::vector<double> w(edges.size());
  if (kind == Kind::Box) {
    for (size_t k = 0; k < edges.size(); ++k) w[k] = edges[k].w;
  } else {
    const double mid = 0.5 * (mu_lo + mu_hi);
    for (size_t k = 0; k < edges.size(); ++k)
      w[k] = edges[k].w0 + mid * edges[k].w_mu;
  }
  return w;
}

std::vector<double> UncertainGraph::weights_at(
    const std::vector<double>& scenario) const {
  if (kind == Kind::Box) {
    if (scenario.size() != edges.size())
      throw std::invalid_argument("weights_at: scenario size mismatch");
    return scenario;
  }
  if (scenario.size() != 1)
    throw std::invalid_argument("weights_at: affine kind expects {mu}");
  std::vector<double> w(edges.size());
  for (size_t k = 0; k < edges.size(); ++k)
    w[k] = edges[k].w0 + scenario[0] * edges[k].w_mu;
  return w;
}

void Cut::validate(int n) const {
  if (static_cast<int>(signs.size()) != n)
    throw std::invalid_argument("Cut: size mismatch");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("Cut: signs not +-1");
}

namespace {

// E'_ij = E_ii + E_jj - 2 E_ij for 1-based endpoints.
void add_edge_matrix(SymMatrix& l, int i, int j, double w) {
  l.set(i - 1, i - 1, l(i - 1, i - 1) + w);
  l.set(j - 1, j - 1, l(j - 1, j - 1) + w);
  l.set(i - 1, j - 1, l(i - 1, j - 1) - w);
}

}  // namespace

SymMatrix laplacian(const UncertainGraph& g, const std::vector<double>& w) {
  if (w.size() != g.edges.size())
    throw std::invalid_argument("laplacian: weight size mismatch");
  SymMatrix l(g.n);
  for (size_t k = 0; k < g.edges.size(); ++k)
    add_edge_matrix(l, g.edges[k].i, g.edges[k].j, w[k]);
  return l;
}

double cut_value(const UncertainGraph& g, const Cut& cut,
                 const std::vector<double>& w) {
  cut.validate(g.n);
  if (w.size() != g.edges.size())
    throw std::invalid_argument("cut_value: weight size mismatch");
  double v = 0.0;
  for (size_t k = 0; k < g.edges.size(); ++k)
    if (cut.in_cut(g.edges[k].i, g.edges[k].j)) v += w[k];
  return v;
}

WorstCaseCut worst_case_cut_value(const UncertainGraph& g, const Cut& cut) {
  cut.validate(g.n);
  WorstCaseCut out;
  if (g.kind == UncertainGraph::Kind::Box) {
    out.weights.resize(g.edges.size());
    for (size_t k = 0; k < g.edges.size(); ++k) {
      const auto& e = g.edges[k];
      // Cut contributions enter with coefficient +1, so the box minimizer
      // drops every cut edge to its lower bound.
      const bool in = cut.in_cut(e.i, e.j);
      out.weights[k] = in ? e.w - e.dev : e.w;
      if (in) out.value += out.weights[k];
    }
    return out;
  }
  double a = 0.0, b = 0.0;
  for (const auto& e : g.edges)
    if (cut.in_cut(e.i, e.j)) {
      a += e.w0;
      b += e.w_mu;
    }
  const double mu = b >= 0 ? g.mu_lo : g.mu_hi;
  out.value = a + b * mu;
  out.weights = g.weights_at({mu});
  return out;
}

MatrixBoxUncertainty weight_uncertainty(const UncertainGraph& g) {
  g.validate();
  if (g.singleton())
    throw std::invalid_argument("weight_uncertainty: weight set is a singleton");
  if (g.kind == UncertainGraph::Kind::Box) {
    std::vector<double> base(g.edges.size());
    for (size_t k = 0; k < g.edges.size(); ++k) base[k] = g.edges[k].w;
    SymMatrix p0 = laplacian(g, base);
    p0 *= 0.25;
    std::vector<SymMatrix> dirs;
    std::vector<double> lo, hi;
    for (const auto& e : g.edges) {
      if (e.dev <= 0) continue;
      SymMatrix d(g.n);
      add_edge_matrix(d, e.i, e.j, -0.25 * e.dev);
      dirs.push_back(std::move(d));
      lo.push_back(0.0);
      hi.push_back(1.0);
    }
    return MatrixBoxUncertainty(std::move(p0), std::move(dirs), std::move(lo),
                                std::move(hi));
  }
  std::vector<double> w0(g.edges.size()), wm(g.edges.size());
  for (size_t k = 0; k < g.edges.size(); ++k) {
    w0[k] = g.edges[k].w0;
    wm[k] = g.edges[k].w_mu;
  }
  SymMatrix p0 = laplacian(g, w0);
  p0 *= 0.25;
  SymMatrix p1 = laplacian(g, wm);
  p1 *= 0.25;
  return MatrixBoxUncertainty(std::move(p0), {std::move(p1)}, {g.mu_lo},
                              {g.mu_hi});
}

RobustSdpProblem relaxation_problem(const UncertainGraph& g) {
  RobustSdpProblem prob{Spectrahedron{}, weight_uncertainty(g)};
  for (int i = 0; i < g.n; ++i)
    prob.feasible.rows.push_back({SymMatrix::basis(g.n, i, i), 1.0});
  return prob;
}

SdpResult robust_maxcut_sdp(const UncertainGraph& g, const ProOptions& opts) {
  g.validate();
  if (!g.singleton()) {
    const RobustSolution sol = solve_robust(relaxation_problem(g), opts);
    return {sol.x, sol.value};
  }
  // Certain weights: plain SDP max <L(w)/4, Y> over unit-diagonal PSD Y.
  ConeProgram prog;
  prog.cone.psd_blocks = {g.n};
  prog.objective = BlockVector::zero(prog.cone);
  SymMatrix obj = laplacian(g, g.nominal_weights());
  obj *= 0.25;
  prog.objective.psd[0] = obj;
  for (int i = 0; i < g.n; ++i) {
    ConstraintRow row{BlockVector::zero(prog.cone), 1.0};
    row.coeff.psd[0] = SymMatrix::basis(g.n, i, i);
    prog.rows.push_back(std::move(row));
  }
  const ConicSolution sol = solve(prog, opts.solver);
  if (sol.status != SolveStatus::Optimal)
    throw SolveError(sol.status, std::string("robust_maxcut_sdp: solve failed: ") +
                                     to_string(sol.status));
  return {sol.primal.psd[0], sol.objective_value};
}

SymMatrix pro_improve_relaxation(const UncertainGraph& g, const SymMatrix& y,
                                 const ProOptions& opts) {
  return improve_to_pro(relaxation_problem(g), y, opts);
}

namespace {

// Deterministic standard normals: one generator per (seed, sample), explicit
// Box-Muller so results do not depend on the standard library's
// normal_distribution implementation.
std::vector<double> normal_vector(unsigned long long seed,
                                  unsigned long long sample, int dim) {
  std::seed_seq seq{static_cast<unsigned int>(seed),
                    static_cast<unsigned int>(seed >> 32),
                    static_cast<unsigned int>(sample),
                    static_cast<unsigned int>(sample >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&rng]() {
    // (0, 1]: guards the log below.
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
  };
  std::vector<double> z(dim);
  for (int i = 0; i < dim; i += 2) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    z[i] = r * std::cos(2.0 * M_PI * u2);
    if (i + 1 < dim) z[i + 1] = r * std::sin(2.0 * M_PI * u2);
  }
  return z;
}

}  // namespace

GwResult gw_round(const UncertainGraph& g, const SymMatrix& y, int samples,
                  unsigned long long seed) {
  g.validate();
  if (samples <= 0) throw std::invalid_argument("gw_round: samples must be > 0");
  if (y.dim() != g.n) throw std::invalid_argument("gw_round: dim mismatch");
  const auto factor = psd_factor(y, 1e-6);
  const int rank_dim = factor.empty() ? 0 : static_cast<int>(factor[0].size());
  const std::vector<double> nominal = g.nominal_weights();

  GwResult out;
  out.samples = samples;
  bool first = true;
  double sum_worst = 0.0;
  Cut cut;
  cut.signs.resize(g.n);
  for (int k = 0; k < samples; ++k) {
    const std::vector<double> r = normal_vector(seed, k, rank_dim);
    for (int i = 0; i < g.n; ++i) {
      double dot = 0.0;
      for (int d = 0; d < rank_dim; ++d) dot += factor[i][d] * r[d];
      cut.signs[i] = dot >= 0 ? 1 : -1;
    }
    const double worst = worst_case_cut_value(g, cut).value;
    sum_worst += worst;
    const double nom = cut_value(g, cut, nominal);
    if (first || worst > out.best_worst_case ||
        (worst == out.best_worst_case && nom > out.best_nominal)) {
      out.best = cut;
      out.best_worst_case = worst;
      out.best_nominal = nom;
      first = false;
    }
  }
  out.mean_worst_case = sum_worst / samples;
  return out;
}

namespace {

// Does xbar Pareto dominate x over the weight set?
bool cut_dominates(const UncertainGraph& g, const Cut& x, const Cut& xbar,
                   double tol) {
  std::vector<int> diff(g.edges.size());
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    diff[k] = (xbar.in_cut(e.i, e.j) ? 1 : 0) - (x.in_cut(e.i, e.j) ? 1 : 0);
  }
  double min_gap = 0.0, relint_gap = 0.0;
  if (g.kind == UncertainGraph::Kind::Box) {
    for (size_t k = 0; k < g.edges.size(); ++k) {
      const auto& e = g.edges[k];
      if (diff[k] > 0)
        min_gap += e.w - e.dev;
      else if (diff[k] < 0)
        min_gap -= e.w;
      relint_gap += diff[k] * (e.w - 0.5 * e.dev);
    }
  } else {
    double a = 0.0, b = 0.0;
    for (size_t k = 0; k < g.edges.size(); ++k) {
      a += diff[k] * g.edges[k].w0;
      b += diff[k] * g.edges[k].w_mu;
    }
    min_gap = a + b * (b >= 0 ? g.mu_lo : g.mu_hi);
    relint_gap = a + b * 0.5 * (g.mu_lo + g.mu_hi);
  }
  return min_gap >= -tol && relint_gap > tol;
}

}  // namespace

MaxcutEnumeration brute_force_maxcut(const UncertainGraph& g) {
  g.validate();
  if (g.n > 20)
    throw std::invalid_argument("brute_force_maxcut: n > 20 not supported");
  std::vector<Cut> all;
  Cut cut;
  cut.signs.assign(g.n, 1);
  // Fixing signs[0] = +1 halves the enumeration; cuts are sign-symmetric.
  for (unsigned long mask = 0; mask < (1ul << (g.n - 1)); ++mask) {
    for (int i = 1; i < g.n; ++i) cut.signs[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    all.push_back(cut);
  }
  MaxcutEnumeration out;
  std::vector<double> worst(all.size());
  for (size_t k = 0; k < all.size(); ++k) {
    worst[k] = worst_case_cut_value(g, all[k]).value;
    if (k == 0 || worst[k] > out.value) out.value = worst[k];
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(out.value));
  for (size_t k = 0; k < all.size(); ++k)
    if (worst[k] >= out.value - tol) out.cuts.push_back(all[k]);
  for (const auto& c : out.cuts) {
    bool dominated = false;
    for (const auto& other : all) {
      if (other.signs == c.signs) continue;
      if (cut_dominates(g, c, other, 1e-9)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.pro_cuts.push_back(c);
  }
  return out;
}

}  // namespace prosdp
