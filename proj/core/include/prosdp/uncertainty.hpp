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

#ifndef PROSDP_UNCERTAINTY_HPP
#define PROSDP_UNCERTAINTY_HPP

#include <optional>
#include <vector>

#include "prosdp/sym_matrix.hpp"

namespace prosdp {

struct InnerMinResult {
  double value = 0.0;
  /// The attaining parameter: mu for matrix boxes, p otherwise.
  std::vector<double> minimizer;
};

/// Affine matrix family P_0 + sum_i mu_i P_i over a mu box. Degenerate
/// coordinates (lo_i == hi_i) are substituted into the base at construction;
/// the remaining box must not be a singleton.
class MatrixBoxUncertainty {
 public:
  MatrixBoxUncertainty(SymMatrix base, std::vector<SymMatrix> directions,
                       std::vector<double> lo, std::vector<double> hi);

  int dim() const { return base_.dim(); }
  int direction_count() const { return static_cast<int>(directions_.size()); }
  const SymMatrix& base() const { return base_; }
  const std::vector<SymMatrix>& directions() const { return directions_; }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }

  SymMatrix at(const std::vector<double>& mu) const;
  /// Midpoint of the box.
  std::vector<double> mu_mid() const;
  /// P(mu_mid), a point of relint(U).
  SymMatrix relint_point() const;

  /// min over U of <P, X>; closed form over the box.
  InnerMinResult inner_min(const SymMatrix& x) const;

 private:
  SymMatrix base_;
  std::vector<SymMatrix> directions_;
  std::vector<double> lo_, hi_;
};

/// Coordinate box [nominal - deviation, nominal], deviation >= 0 and not
/// identically zero.
class IntervalUncertainty {
 public:
  IntervalUncertainty(std::vector<double> nominal, std::vector<double> deviation);

  int dim() const { return static_cast<int>(nominal_.size()); }
  const std::vector<double>& nominal() const { return nominal_; }
  const std::vector<double>& deviation() const { return deviation_; }

  /// nominal - deviation/2; coordinates with zero deviation stay at nominal.
  std::vector<double> relint_point() const;
  /// min over the box of coeff . p.
  InnerMinResult inner_min(const std::vector<double>& coeff) const;

 private:
  std::vector<double> nominal_, deviation_;
};

/// The fixed SOC-bounded set {p : p1 >= 1, p1^2 <= p2, p2 <= 4}.
struct KnapsackSocUncertainty {
  static bool contains(double p1, double p2) {
    return p1 >= 1.0 && p1 * p1 <= p2 && p2 <= 4.0;
  }
  std::vector<double> relint_point() const { return {1.2, 2.0}; }
  /// min of c1 p1 + c2 p2: vertices (1,1), (1,4), (2,4) plus the parabola
  /// stationary point when c2 > 0.
  InnerMinResult inner_min(const std::vector<double>& coeff) const;
};

/// Constraint-block description of membership Z in U*. Rows are linear in
/// (the pairing of Z against a fixed element, auxiliary nonnegative scalars).
struct DualConeRow {
  enum class Sense { Eq, Ge };
  /// Matrix paired against Z (box case); empty dim-0 marker unused otherwise.
  std::optional<SymMatrix> z_matrix;
  /// Vector paired against z (interval case).
  std::vector<double> z_vector;
  std::vector<double> aux_coeff;
  Sense sense = Sense::Eq;
  double rhs = 0.0;
};

struct DualConeRows {
  int aux_nonneg = 0;
  std::vector<DualConeRow> rows;
};

/// LP-duality encoding: y in R^{2N}_{>=0} split as (u, v) with
/// <Z,P_i> + u_i - v_i = 0 and <Z,P_0> - mu+^T u + mu-^T v >= 0.
DualConeRows dual_cone_rows(const MatrixBoxUncertainty& u);
/// y >= 0 with pbar^T z - dp^T y >= 0 and y >= z.
DualConeRows dual_cone_rows(const IntervalUncertainty& u);

/// Closed-form feasibility check of the encodings above: returns the
/// auxiliary witness y when Z is a dual-cone member.
std::optional<std::vector<double>> dual_cone_certificate(
    const MatrixBoxUncertainty& u, const SymMatrix& z, double tol = 0.0);
std::optional<std::vector<double>> dual_cone_certificate(
    const IntervalUncertainty& u, const std::vector<double>& z,
    double tol = 0.0);

}  // namespace prosdp

#endif  // PROSDP_UNCERTAINTY_HPP
