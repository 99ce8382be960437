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

#include "prosdp/uncertainty.hpp"

#include <algorithm>
#include <cmath>

namespace prosdp {

MatrixBoxUncertainty::MatrixBoxUncertainty(SymMatrix base,
                                           std::vector<SymMatrix> directions,
                                           std::vector<double> lo,
                                           std::vector<double> hi)
    : base_(std::move(base)) {
  if (directions.size() != lo.size() || directions.size() != hi.size())
    throw std::invalid_argument("MatrixBoxUncertainty: bound count mismatch");
  if (directions.empty())
    throw std::invalid_argument("MatrixBoxUncertainty: no directions");
  for (size_t i = 0; i < directions.size(); ++i) {
    if (!directions[i].same_dim(base_))
      throw std::invalid_argument("MatrixBoxUncertainty: dim mismatch");
    if (lo[i] > hi[i])
      throw std::invalid_argument("MatrixBoxUncertainty: lo > hi");
    if (lo[i] == hi[i]) {
      // Fold fixed coordinates into the base.
      base_ += lo[i] * directions[i];
    } else {
      directions_.push_back(std::move(directions[i]));
      lo_.push_back(lo[i]);
      hi_.push_back(hi[i]);
    }
  }
  if (directions_.empty())
    throw std::invalid_argument("MatrixBoxUncertainty: U is a singleton");
}

SymMatrix MatrixBoxUncertainty::at(const std::vector<double>& mu) const {
  if (mu.size() != directions_.size())
    throw std::invalid_argument("MatrixBoxUncertainty::at: mu size mismatch");
  SymMatrix p = base_;
  for (size_t i = 0; i < directions_.size(); ++i) p += mu[i] * directions_[i];
  return p;
}

std::vector<double> MatrixBoxUncertainty::mu_mid() const {
  std::vector<double> mu(directions_.size());
  for (size_t i = 0; i < mu.size(); ++i) mu[i] = 0.5 * (lo_[i] + hi_[i]);
  return mu;
}

SymMatrix MatrixBoxUncertainty::relint_point() const { return at(mu_mid()); }

InnerMinResult MatrixBoxUncertainty::inner_min(const SymMatrix& x) const {
  if (!x.same_dim(base_))
    throw std::invalid_argument("inner_min: dimension mismatch");
  InnerMinResult r;
  r.value = frobenius(base_, x);
  r.minimizer.resize(directions_.size());
  for (size_t i = 0; i < directions_.size(); ++i) {
    const double t = frobenius(directions_[i], x);
    r.minimizer[i] = t >= 0 ? lo_[i] : hi_[i];
    r.value += r.minimizer[i] * t;
  }
  return r;
}

IntervalUncertainty::IntervalUncertainty(std::vector<double> nominal,
                                         std::vector<double> deviation)
    : nominal_(std::move(nominal)), deviation_(std::move(deviation)) {
  if (nominal_.size() != deviation_.size() || nominal_.empty())
    throw std::invalid_argument("IntervalUncertainty: size mismatch");
  bool any = false;
  for (double d : deviation_) {
    if (d < 0) throw std::invalid_argument("IntervalUncertainty: deviation < 0");
    any = any || d > 0;
  }
  if (!any) throw std::invalid_argument("IntervalUncertainty: U is a singleton");
}

std::vector<double> IntervalUncertainty::relint_point() const {
  std::vector<double> p(nominal_.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = nominal_[i] - 0.5 * deviation_[i];
  return p;
}

InnerMinResult IntervalUncertainty::inner_min(
    const std::vector<double>& coeff) const {
  if (coeff.size() != nominal_.size())
    throw std::invalid_argument("inner_min: dimension mismatch");
  InnerMinResult r;
  r.minimizer.resize(coeff.size());
  for (size_t i = 0; i < coeff.size(); ++i) {
    r.minimizer[i] =
        coeff[i] >= 0 ? nominal_[i] - deviation_[i] : nominal_[i];
    r.value += coeff[i] * r.minimizer[i];
  }
  return r;
}

InnerMinResult KnapsackSocUncertainty::inner_min(
    const std::vector<double>& coeff) const {
  if (coeff.size() != 2)
    throw std::invalid_argument("KnapsackSoc inner_min: need 2 coefficients");
  const double c1 = coeff[0];
  const double c2 = coeff[1];
  std::vector<std::vector<double>> cand = {{1.0, 1.0}, {1.0, 4.0}, {2.0, 4.0}};
  if (c2 > 0) {
    // For c2 > 0 the minimum over p2 sits on the parabola p2 = p1^2; the
    // resulting c1 p1 + c2 p1^2 has an interior stationary point.
    const double p1 = -c1 / (2.0 * c2);
    if (p1 > 1.0 && p1 < 2.0) cand.push_back({p1, p1 * p1});
  }
  InnerMinResult r;
  bool first = true;
  for (const auto& p : cand) {
    const double v = c1 * p[0] + c2 * p[1];
    if (first || v < r.value) {
      r.value = v;
      r.minimizer = p;
      first = false;
    }
  }
  return r;
}

DualConeRows dual_cone_rows(const MatrixBoxUncertainty& u) {
  const int n = u.direction_count();
  DualConeRows out;
  out.aux_nonneg = 2 * n;
  for (int i = 0; i < n; ++i) {
    DualConeRow row;
    row.z_matrix = u.directions()[i];
    row.aux_coeff.assign(2 * n, 0.0);
    row.aux_coeff[i] = 1.0;       // u_i
    row.aux_coeff[n + i] = -1.0;  // v_i
    row.sense = DualConeRow::Sense::Eq;
    out.rows.push_back(std::move(row));
  }
  DualConeRow ineq;
  ineq.z_matrix = u.base();
  ineq.aux_coeff.assign(2 * n, 0.0);
  for (int i = 0; i < n; ++i) {
    ineq.aux_coeff[i] = -u.hi()[i];
    ineq.aux_coeff[n + i] = u.lo()[i];
  }
  ineq.sense = DualConeRow::Sense::Ge;
  out.rows.push_back(std::move(ineq));
  return out;
}

DualConeRows dual_cone_rows(const IntervalUncertainty& u) {
  const int n = u.dim();
  DualConeRows out;
  out.aux_nonneg = n;
  DualConeRow head;
  head.z_vector = u.nominal();
  head.aux_coeff = u.deviation();
  for (double& v : head.aux_coeff) v = -v;
  head.sense = DualConeRow::Sense::Ge;
  out.rows.push_back(std::move(head));
  for (int i = 0; i < n; ++i) {
    DualConeRow row;  // y_i - z_i >= 0
    row.z_vector.assign(n, 0.0);
    row.z_vector[i] = -1.0;
    row.aux_coeff.assign(n, 0.0);
    row.aux_coeff[i] = 1.0;
    row.sense = DualConeRow::Sense::Ge;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::optional<std::vector<double>> dual_cone_certificate(
    const MatrixBoxUncertainty& u, const SymMatrix& z, double tol) {
  const int n = u.direction_count();
  std::vector<double> y(2 * n, 0.0);
  double lhs = frobenius(u.base(), z);
  for (int i = 0; i < n; ++i) {
    const double t = frobenius(u.directions()[i], z);
    // Optimal LP-dual witness: route t through whichever bound binds.
    if (t >= 0) {
      y[n + i] = t;
      lhs += u.lo()[i] * t;
    } else {
      y[i] = -t;
      lhs += u.hi()[i] * t;
    }
  }
  if (lhs >= -tol) return y;
  return std::nullopt;
}

std::optional<std::vector<double>> dual_cone_certificate(
    const IntervalUncertainty& u, const std::vector<double>& z, double tol) {
  if (static_cast<int>(z.size()) != u.dim())
    throw std::invalid_argument("dual_cone_certificate: dimension mismatch");
  std::vector<double> y(z.size());
  double lhs = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    y[i] = std::max(z[i], 0.0);
    lhs += u.nominal()[i] * z[i] - u.deviation()[i] * y[i];
  }
  if (lhs >= -tol) return y;
  return std::nullopt;
}

}  // namespace prosdp
