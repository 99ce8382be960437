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

#include "prosdp/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace prosdp {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
  upper_.assign(static_cast<size_t>(dim) * (dim + 1) / 2, 0.0);
}

int SymMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::out_of_range("SymMatrix: index out of range");
  if (i > j) std::swap(i, j);
  // Row-major upper triangle: row i starts after i full rows.
  return i * dim_ - i * (i - 1) / 2 + (j - i);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::basis(int dim, int i, int j) {
  SymMatrix m(dim);
  m.set(i, j, i == j ? 1.0 : 0.5);
  return m;
}

SymMatrix SymMatrix::diag(const std::vector<double>& d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[i]);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("SymMatrix::from_rows: ragged input");
    for (int j = i; j < n; ++j) m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
  }
  return m;
}

SymMatrix SymMatrix::outer(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, x[i] * x[j]);
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  return std::sqrt(frobenius(*this, *this));
}

double SymMatrix::quad(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("SymMatrix::quad: dimension mismatch");
  double v = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) v += x[i] * (*this)(i, j) * x[j];
  return v;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (!same_dim(other))
    throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (size_t k = 0; k < upper_.size(); ++k) upper_[k] += other.upper_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  if (!same_dim(other))
    throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (size_t k = 0; k < upper_.size(); ++k) upper_[k] -= other.upper_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& v : upper_) v *= s;
  return *this;
}

double frobenius(const SymMatrix& a, const SymMatrix& b) {
  if (!a.same_dim(b))
    throw std::invalid_argument("frobenius: dimension mismatch");
  double v = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    v += a(i, i) * b(i, i);
    for (int j = i + 1; j < a.dim(); ++j) v += 2.0 * a(i, j) * b(i, j);
  }
  return v;
}

namespace {

double offdiag_norm(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
  return std::sqrt(s);
}

}  // namespace

EigDecomposition sym_eig(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  const double scale = std::max(1.0, m.frobenius_norm());
  const double stop = 1e-14 * scale;
  const int max_sweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a) > stop) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("sym_eig: Jacobi sweeps did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        // Smaller-magnitude root of t^2 + 2 theta t - 1 = 0.
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x][x] > a[y][y]; });

  EigDecomposition d;
  d.eigenvalues.reserve(n);
  d.eigenvectors.reserve(n);
  for (int k : order) {
    d.eigenvalues.push_back(a[k][k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i][k];
    d.eigenvectors.push_back(std::move(col));
  }
  return d;
}

double lambda_max(const SymMatrix& a) { return sym_eig(a).eigenvalues.front(); }

double lambda_min(const SymMatrix& a) { return sym_eig(a).eigenvalues.back(); }

bool is_psd(const SymMatrix& a, double tol) {
  return lambda_min(a) >= -tol;
}

std::vector<std::vector<double>> psd_factor(const SymMatrix& a, double tol) {
  const int n = a.dim();
  EigDecomposition d = sym_eig(a);
  if (d.eigenvalues.back() < -tol)
    throw std::runtime_error("psd_factor: matrix is not PSD (lambda_min = " +
                             std::to_string(d.eigenvalues.back()) + ")");
  std::vector<std::vector<double>> y(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(0.0, d.eigenvalues[k]);
    const double root = std::sqrt(lam);
    for (int i = 0; i < n; ++i) y[i][k] = root * d.eigenvectors[k][i];
  }
  return y;
}

}  // namespace prosdp
