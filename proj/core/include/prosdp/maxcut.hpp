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

#ifndef PROSDP_MAXCUT_HPP
#define PROSDP_MAXCUT_HPP

#include <utility>
#include <vector>

#include "prosdp/pro.hpp"
#include "prosdp/sym_matrix.hpp"
#include "prosdp/uncertainty.hpp"

namespace prosdp {

/// Graph with uncertain edge weights. Box kind: w_e ranges over
/// [w - dev, w] independently per edge. Affine kind: w_e(mu) = w0 + mu w_mu
/// for a single scalar mu in [mu_lo, mu_hi].
struct UncertainGraph {
  enum class Kind { Box, Affine };
  struct Edge {
    int i = 0, j = 0;  // 1-based, i < j
    double w = 0.0, dev = 0.0;
    double w0 = 0.0, w_mu = 0.0;
  };

  Kind kind = Kind::Box;
  int n = 0;
  std::vector<Edge> edges;
  double mu_lo = 0.0, mu_hi = 0.0;

  void validate() const;
  /// True when the weight set is a single point.
  bool singleton() const;
  /// Lower / nominal corners of the weight set, edge-indexed. Affine kind
  /// uses the scenario extremes and the mu midpoint respectively.
  std::vector<double> nominal_weights() const;
  /// Weight vector at a scenario: box kind takes the weights directly,
  /// affine kind takes {mu}.
  std::vector<double> weights_at(const std::vector<double>& scenario) const;
};

struct Cut {
  std::vector<int> signs;  // entries in {-1, +1}

  void validate(int n) const;
  bool in_cut(int i, int j) const { return signs[i - 1] != signs[j - 1]; }
};

SymMatrix laplacian(const UncertainGraph& g, const std::vector<double>& w);

/// (1/4) x^T L_w x == sum of w_e over cut edges.
double cut_value(const UncertainGraph& g, const Cut& cut,
                 const std::vector<double>& w);

struct WorstCaseCut {
  double value = 0.0;
  std::vector<double> weights;  // attaining w, edge-indexed
};
WorstCaseCut worst_case_cut_value(const UncertainGraph& g, const Cut& cut);

/// {L(w)/4 : w in Z} as a matrix box; throws when the weight set is a
/// singleton.
MatrixBoxUncertainty weight_uncertainty(const UncertainGraph& g);

/// The robust counterpart with unit-diagonal feasible set.
RobustSdpProblem relaxation_problem(const UncertainGraph& g);

struct SdpResult {
  SymMatrix y;
  double value = 0.0;
};

/// Robust SDP relaxation: max over {Y >= 0, diag(Y) = 1} of the worst-case
/// pairing with L(w)/4. Certain weights fall back to a plain SDP.
SdpResult robust_maxcut_sdp(const UncertainGraph& g,
                            const ProOptions& opts = {});

/// Replaces a robustly optimal relaxation solution by a Pareto robustly
/// optimal one.
SymMatrix pro_improve_relaxation(const UncertainGraph& g, const SymMatrix& y,
                                 const ProOptions& opts = {});

struct GwResult {
  Cut best;
  double best_worst_case = 0.0;
  double best_nominal = 0.0;
  double mean_worst_case = 0.0;
  int samples = 0;
};

/// Random-hyperplane rounding of a relaxation solution. Deterministic per
/// (seed, sample index); best cut by worst-case value with the nominal value
/// as tie-breaker; sign(0) counts as +1.
GwResult gw_round(const UncertainGraph& g, const SymMatrix& y, int samples,
                  unsigned long long seed);

struct MaxcutEnumeration {
  double value = 0.0;
  std::vector<Cut> cuts;      // all worst-case optimal cuts
  std::vector<Cut> pro_cuts;  // the Pareto robustly optimal ones among them
};

/// Exact robust max cut by enumeration, n <= 20; cuts are normalized to
/// signs[0] = +1.
MaxcutEnumeration brute_force_maxcut(const UncertainGraph& g);

}  // namespace prosdp

#endif  // PROSDP_MAXCUT_HPP
