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

#ifndef PROSDP_SYM_MATRIX_HPP
#define PROSDP_SYM_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace prosdp {

/// Dense real symmetric matrix. Only the upper triangle is stored
/// (row-major), so entries[i][j] == entries[j][i] holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  /// E_{ij} = 1/2 (e_i e_j^T + e_j e_i^T), the standard basis of S^n.
  static SymMatrix basis(int dim, int i, int j);
  static SymMatrix diag(const std::vector<double>& d);
  /// Builds from full row data; off-diagonal pairs are averaged.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  /// x x^T for a column vector x.
  static SymMatrix outer(const std::vector<double>& x);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return upper_[index(i, j)]; }
  /// Sets entry (i, j) and its mirror (j, i).
  void set(int i, int j, double value) { upper_[index(i, j)] = value; }

  const std::vector<double>& upper() const { return upper_; }
  std::vector<double>& upper() { return upper_; }

  double trace() const;
  double frobenius_norm() const;
  /// Quadratic form x^T A x.
  double quad(const std::vector<double>& x) const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix& operator*=(double s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

  bool same_dim(const SymMatrix& other) const { return dim_ == other.dim_; }

 private:
  int index(int i, int j) const;

  int dim_;
  std::vector<double> upper_;
};

/// <a, b> = sum_{i,j} a_ij b_ij.
double frobenius(const SymMatrix& a, const SymMatrix& b);

struct EigDecomposition {
  /// Sorted descending.
  std::vector<double> eigenvalues;
  /// eigenvectors[k] is the unit eigenvector for eigenvalues[k].
  std::vector<std::vector<double>> eigenvectors;
};

/// Cyclic Jacobi eigendecomposition. Throws std::runtime_error if the
/// sweep cap is exhausted before the off-diagonal mass vanishes.
EigDecomposition sym_eig(const SymMatrix& a);

double lambda_max(const SymMatrix& a);
double lambda_min(const SymMatrix& a);

bool is_psd(const SymMatrix& a, double tol = 1e-8);

/// Factor a = sum_k outer(y_k) columns, i.e. y_i . y_j = a_ij. Eigenvalues in
/// [-tol, 0) are clipped to zero; anything below -tol throws.
/// Returns one vector y_k per row index k.
std::vector<std::vector<double>> psd_factor(const SymMatrix& a,
                                            double tol = 1e-8);

}  // namespace prosdp

#endif  // PROSDP_SYM_MATRIX_HPP
