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

#include "prosdp/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace prosdp {

int ConeSpec::variable_count() const {
  int d = nonneg_dim + free_dim;
  for (int n : psd_blocks) d += n * (n + 1) / 2;
  return d;
}

void ConeSpec::validate() const {
  for (int n : psd_blocks)
    if (n < 1) throw std::invalid_argument("ConeSpec: psd block dim < 1");
  if (nonneg_dim < 0 || free_dim < 0)
    throw std::invalid_argument("ConeSpec: negative dimension");
  if (psd_blocks.empty() && nonneg_dim == 0 && free_dim == 0)
    throw std::invalid_argument("ConeSpec: no variables");
}

BlockVector BlockVector::zero(const ConeSpec& cone) {
  BlockVector v;
  for (int n : cone.psd_blocks) v.psd.emplace_back(n);
  v.nonneg.assign(cone.nonneg_dim, 0.0);
  v.free_part.assign(cone.free_dim, 0.0);
  return v;
}

double block_dot(const BlockVector& a, const BlockVector& b) {
  if (a.psd.size() != b.psd.size() || a.nonneg.size() != b.nonneg.size() ||
      a.free_part.size() != b.free_part.size())
    throw std::invalid_argument("block_dot: shape mismatch");
  double v = 0.0;
  for (size_t k = 0; k < a.psd.size(); ++k) v += frobenius(a.psd[k], b.psd[k]);
  for (size_t k = 0; k < a.nonneg.size(); ++k) v += a.nonneg[k] * b.nonneg[k];
  for (size_t k = 0; k < a.free_part.size(); ++k)
    v += a.free_part[k] * b.free_part[k];
  return v;
}

void ConeProgram::validate() const {
  cone.validate();
  auto check = [&](const BlockVector& v, const char* what) {
    if (v.psd.size() != cone.psd_blocks.size())
      throw std::invalid_argument(std::string("ConeProgram: ") + what +
                                  ": psd block count mismatch");
    for (size_t k = 0; k < v.psd.size(); ++k)
      if (v.psd[k].dim() != cone.psd_blocks[k])
        throw std::invalid_argument(std::string("ConeProgram: ") + what +
                                    ": psd block dim mismatch");
    if (static_cast<int>(v.nonneg.size()) != cone.nonneg_dim ||
        static_cast<int>(v.free_part.size()) != cone.free_dim)
      throw std::invalid_argument(std::string("ConeProgram: ") + what +
                                  ": scalar block size mismatch");
  };
  check(objective, "objective");
  for (const auto& row : rows) check(row.coeff, "constraint row");
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::PrimalInfeasible: return "PrimalInfeasible";
    case SolveStatus::DualInfeasible: return "DualInfeasible";
    case SolveStatus::NumericalFailure: return "NumericalFailure";
  }
  return "?";
}

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

// ---------------------------------------------------------------------------
// Small dense helpers (row-major flat n x n).

using Mat = std::vector<double>;

Mat mat_mul(int n, const Mat& a, const Mat& b) {
  Mat c(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

Mat sym_to_mat(const SymMatrix& s) {
  const int n = s.dim();
  Mat m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = s(i, j);
  return m;
}

SymMatrix mat_to_sym(int n, const Mat& m) {
  SymMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.set(i, j, 0.5 * (m[i * n + j] + m[j * n + i]));
  return s;
}

// f(A) = Q f(d) Q^T from an eigendecomposition of A.
Mat eig_fn(const EigDecomposition& e, double (*fn)(double)) {
  const int n = static_cast<int>(e.eigenvalues.size());
  Mat m(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double f = fn(e.eigenvalues[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i * n + j] += f * e.eigenvectors[k][i] * e.eigenvectors[k][j];
  }
  return m;
}

double fn_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }
double fn_invsqrt(double v) { return 1.0 / std::sqrt(std::max(v, 1e-300)); }

// Congruence W M W with W given as flat matrix, M symmetric.
SymMatrix congruence(int n, const Mat& w, const SymMatrix& m) {
  return mat_to_sym(n, mat_mul(n, mat_mul(n, w, sym_to_mat(m)), w));
}

// Cholesky solve of a dense SPD system, with diagonal jitter retries and
// iterative refinement against the unperturbed matrix.
bool chol_solve(int n, Mat a, std::vector<double> b, std::vector<double>* out) {
  double jitter = 0.0;
  double maxdiag = 1.0;
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, std::abs(a[i * n + i]));
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat l = a;
    if (jitter > 0)
      for (int i = 0; i < n; ++i) l[i * n + i] += jitter;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double sum = l[i * n + j];
        for (int k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
        if (i == j) {
          if (sum <= 0.0) {
            ok = false;
            break;
          }
          l[i * n + i] = std::sqrt(sum);
        } else {
          l[i * n + j] = sum / l[j * n + j];
        }
      }
    }
    if (ok) {
      auto backsolve = [&](std::vector<double> rhs) {
        for (int i = 0; i < n; ++i) {
          for (int k = 0; k < i; ++k) rhs[i] -= l[i * n + k] * rhs[k];
          rhs[i] /= l[i * n + i];
        }
        for (int i = n - 1; i >= 0; --i) {
          for (int k = i + 1; k < n; ++k) rhs[i] -= l[k * n + i] * rhs[k];
          rhs[i] /= l[i * n + i];
        }
        return rhs;
      };
      std::vector<double> x = backsolve(b);
      for (int round = 0; round < 2; ++round) {
        std::vector<double> r = b;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) r[i] -= a[i * n + k] * x[k];
        const std::vector<double> e = backsolve(std::move(r));
        for (int i = 0; i < n; ++i) x[i] += e[i];
      }
      *out = std::move(x);
      return true;
    }
    jitter = (jitter == 0.0) ? 1e-12 * maxdiag : jitter * 100.0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Internal flat layout: svec'd PSD blocks, then nonnegative scalars
// (including the split halves of free variables).

struct Layout {
  struct Psd {
    int n;
    int offset;
    int len;
  };
  std::vector<Psd> psd;
  int nonneg_offset = 0;
  int nonneg_len = 0;  // includes 2 * free_dim split scalars
  int orig_nonneg = 0;
  int free_dim = 0;
  int total = 0;
  double nu = 0;  // barrier parameter degree
};

Layout make_layout(const ConeSpec& cone) {
  Layout lay;
  int off = 0;
  for (int n : cone.psd_blocks) {
    lay.psd.push_back({n, off, n * (n + 1) / 2});
    off += n * (n + 1) / 2;
    lay.nu += n;
  }
  lay.nonneg_offset = off;
  lay.orig_nonneg = cone.nonneg_dim;
  lay.free_dim = cone.free_dim;
  lay.nonneg_len = cone.nonneg_dim + 2 * cone.free_dim;
  lay.total = off + lay.nonneg_len;
  lay.nu += lay.nonneg_len;
  return lay;
}

void svec_into(const SymMatrix& m, double* out) {
  const int n = m.dim();
  int k = 0;
  for (int i = 0; i < n; ++i) {
    out[k++] = m(i, i);
    for (int j = i + 1; j < n; ++j) out[k++] = kSqrt2 * m(i, j);
  }
}

SymMatrix svec_out(int n, const double* in) {
  SymMatrix m(n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    m.set(i, i, in[k++]);
    for (int j = i + 1; j < n; ++j) m.set(i, j, in[k++] / kSqrt2);
  }
  return m;
}

// Flattens a BlockVector (negating free-variable coefficients into the
// split minus-half).
std::vector<double> flatten(const Layout& lay, const BlockVector& v) {
  std::vector<double> out(lay.total, 0.0);
  for (size_t b = 0; b < lay.psd.size(); ++b)
    svec_into(v.psd[b], out.data() + lay.psd[b].offset);
  int off = lay.nonneg_offset;
  for (int i = 0; i < lay.orig_nonneg; ++i) out[off + i] = v.nonneg[i];
  off += lay.orig_nonneg;
  for (int i = 0; i < lay.free_dim; ++i) {
    out[off + i] = v.free_part[i];
    out[off + lay.free_dim + i] = -v.free_part[i];
  }
  return out;
}

BlockVector unflatten(const Layout& lay, const ConeSpec& cone,
                      const std::vector<double>& x) {
  BlockVector v = BlockVector::zero(cone);
  for (size_t b = 0; b < lay.psd.size(); ++b)
    v.psd[b] = svec_out(lay.psd[b].n, x.data() + lay.psd[b].offset);
  int off = lay.nonneg_offset;
  for (int i = 0; i < lay.orig_nonneg; ++i) v.nonneg[i] = x[off + i];
  off += lay.orig_nonneg;
  for (int i = 0; i < lay.free_dim; ++i)
    v.free_part[i] = x[off + i] - x[off + lay.free_dim + i];
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double v = 0.0;
  for (size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  return v;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Per-iteration Nesterov-Todd scaling state.
struct NtState {
  // Per PSD block.
  std::vector<Mat> whalf, winvhalf;
  std::vector<EigDecomposition> lam_eig;  // eig of the scaled point lambda
  std::vector<SymMatrix> lam;
  // Per nonneg scalar.
  std::vector<double> w2;       // x_i / s_i
  std::vector<double> lam_nn;   // sqrt(x_i s_i)
};

bool make_nt(const Layout& lay, const std::vector<double>& x,
             const std::vector<double>& s, NtState* nt) {
  nt->whalf.clear();
  nt->winvhalf.clear();
  nt->lam_eig.clear();
  nt->lam.clear();
  for (const auto& blk : lay.psd) {
    SymMatrix X = svec_out(blk.n, x.data() + blk.offset);
    SymMatrix S = svec_out(blk.n, s.data() + blk.offset);
    EigDecomposition ex = sym_eig(X);
    if (ex.eigenvalues.back() <= 0) return false;
    Mat xh = eig_fn(ex, fn_sqrt);
    SymMatrix B = congruence(blk.n, xh, S);
    EigDecomposition eb = sym_eig(B);
    if (eb.eigenvalues.back() <= 0) return false;
    Mat binvh = eig_fn(eb, fn_invsqrt);
    // W = X^{1/2} B^{-1/2} X^{1/2} satisfies W S W = X.
    Mat w = mat_mul(blk.n, mat_mul(blk.n, xh, binvh), xh);
    SymMatrix Wsym = mat_to_sym(blk.n, w);
    EigDecomposition ew = sym_eig(Wsym);
    if (ew.eigenvalues.back() <= 0) return false;
    nt->whalf.push_back(eig_fn(ew, fn_sqrt));
    nt->winvhalf.push_back(eig_fn(ew, fn_invsqrt));
    SymMatrix lam = congruence(blk.n, nt->winvhalf.back(), X);
    nt->lam_eig.push_back(sym_eig(lam));
    nt->lam.push_back(std::move(lam));
  }
  nt->w2.assign(lay.nonneg_len, 0.0);
  nt->lam_nn.assign(lay.nonneg_len, 0.0);
  for (int i = 0; i < lay.nonneg_len; ++i) {
    const double xi = x[lay.nonneg_offset + i];
    const double si = s[lay.nonneg_offset + i];
    if (xi <= 0 || si <= 0) return false;
    nt->w2[i] = xi / si;
    nt->lam_nn[i] = std::sqrt(xi * si);
  }
  return true;
}

// H(u) = W mat(u) W on PSD blocks, diag(x/s) elementwise on scalars.
std::vector<double> apply_h(const Layout& lay, const NtState& nt,
                            const std::vector<double>& u) {
  std::vector<double> out(lay.total, 0.0);
  for (size_t b = 0; b < lay.psd.size(); ++b) {
    const auto& blk = lay.psd[b];
    SymMatrix U = svec_out(blk.n, u.data() + blk.offset);
    // W u W = W^{1/2} (W^{1/2} u W^{1/2}) W^{1/2}
    SymMatrix t = congruence(blk.n, nt.whalf[b], U);
    SymMatrix r = congruence(blk.n, nt.whalf[b], t);
    svec_into(r, out.data() + blk.offset);
  }
  for (int i = 0; i < lay.nonneg_len; ++i)
    out[lay.nonneg_offset + i] = nt.w2[i] * u[lay.nonneg_offset + i];
  return out;
}

// Solve 1/2 (lam M + M lam) = R in the eigenbasis of lam.
SymMatrix lyapunov_solve(const EigDecomposition& e, const SymMatrix& r) {
  const int n = r.dim();
  // Rt = Q^T R Q
  Mat q(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) q[i * n + k] = e.eigenvectors[k][i];
  Mat qt(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) qt[i * n + j] = q[j * n + i];
  Mat rt = mat_mul(n, mat_mul(n, qt, sym_to_mat(r)), q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double denom = 0.5 * (e.eigenvalues[i] + e.eigenvalues[j]);
      rt[i * n + j] /= (std::abs(denom) > 1e-300 ? denom : 1e-300);
    }
  return mat_to_sym(n, mat_mul(n, mat_mul(n, q, rt), qt));
}

// Largest alpha with x + alpha dx staying in the cone (capped).
double max_step(const Layout& lay, const std::vector<double>& x,
                const std::vector<double>& dx, double cap) {
  double alpha = cap;
  for (const auto& blk : lay.psd) {
    SymMatrix X = svec_out(blk.n, x.data() + blk.offset);
    SymMatrix D = svec_out(blk.n, dx.data() + blk.offset);
    EigDecomposition ex = sym_eig(X);
    Mat xinvh = eig_fn(ex, fn_invsqrt);
    SymMatrix G = congruence(blk.n, xinvh, D);
    const double lmin = sym_eig(G).eigenvalues.back();
    if (lmin < 0) alpha = std::min(alpha, -1.0 / lmin);
  }
  for (int i = 0; i < lay.nonneg_len; ++i) {
    const double di = dx[lay.nonneg_offset + i];
    if (di < 0) alpha = std::min(alpha, -x[lay.nonneg_offset + i] / di);
  }
  return alpha;
}

// Distance of the flattened point to the cone (negative-part norm).
double cone_dist(const Layout& lay, const std::vector<double>& z) {
  double d2 = 0.0;
  for (const auto& blk : lay.psd) {
    SymMatrix Z = svec_out(blk.n, z.data() + blk.offset);
    for (double ev : sym_eig(Z).eigenvalues)
      if (ev < 0) d2 += ev * ev;
  }
  for (int i = 0; i < lay.nonneg_len; ++i) {
    const double v = z[lay.nonneg_offset + i];
    if (v < 0) d2 += v * v;
  }
  return std::sqrt(d2);
}

}  // namespace

ConicSolution solve(const ConeProgram& prog, const SolverOptions& opts) {
  prog.validate();
  const Layout lay = make_layout(prog.cone);
  const int d = lay.total;

  // Maximization input; solve min (-c)^T x internally.
  std::vector<double> c = flatten(lay, prog.objective);
  for (double& v : c) v = -v;

  // Assemble rows, normalize, and drop linearly dependent ones
  // (Gram-Schmidt presolve).
  const int m_in = static_cast<int>(prog.rows.size());
  std::vector<std::vector<double>> arows;
  std::vector<double> b;
  std::vector<double> row_scale;   // original row index -> 1/norm, 0 if dropped
  std::vector<int> row_index;      // kept row -> original index
  row_scale.assign(m_in, 0.0);
  std::vector<std::vector<double>> ortho;
  std::vector<double> ortho_rhs;
  for (int i = 0; i < m_in; ++i) {
    std::vector<double> a = flatten(lay, prog.rows[i].coeff);
    double rhs = prog.rows[i].rhs;
    const double na = norm2(a);
    if (na < 1e-14) {
      if (std::abs(rhs) > 1e-10) {
        ConicSolution sol;
        sol.status = SolveStatus::PrimalInfeasible;
        sol.dual.assign(m_in, 0.0);
        return sol;
      }
      continue;  // vacuous row
    }
    for (double& v : a) v /= na;
    rhs /= na;
    // project out accepted directions
    std::vector<double> res = a;
    double res_rhs = rhs;
    for (size_t k = 0; k < ortho.size(); ++k) {
      const double p = dot(res, ortho[k]);
      for (int j = 0; j < d; ++j) res[j] -= p * ortho[k][j];
      res_rhs -= p * ortho_rhs[k];
    }
    const double rn = norm2(res);
    if (rn < 1e-10) {
      if (std::abs(res_rhs) > 1e-8) {
        ConicSolution sol;
        sol.status = SolveStatus::PrimalInfeasible;
        sol.dual.assign(m_in, 0.0);
        return sol;
      }
      std::fprintf(stderr,
                   "prosdp: dropping linearly dependent constraint row %d\n",
                   i);
      continue;
    }
    for (double& v : res) v /= rn;
    ortho.push_back(res);
    ortho_rhs.push_back(res_rhs / rn);
    arows.push_back(std::move(a));
    b.push_back(rhs);
    row_scale[i] = 1.0 / na;
    row_index.push_back(i);
  }
  const int m = static_cast<int>(arows.size());

  // Cold start.
  std::vector<double> x(d, 0.0), s(d, 0.0), y(m, 0.0);
  const double bn = norm2(b);
  const double cn = norm2(c);
  const double xi = std::max(1.0, bn);
  const double zeta = std::max(1.0, cn);
  for (const auto& blk : lay.psd) {
    SymMatrix I = SymMatrix::identity(blk.n);
    SymMatrix Ix = xi * I;
    SymMatrix Is = zeta * I;
    svec_into(Ix, x.data() + blk.offset);
    svec_into(Is, s.data() + blk.offset);
  }
  for (int i = 0; i < lay.nonneg_len; ++i) {
    x[lay.nonneg_offset + i] = xi;
    s[lay.nonneg_offset + i] = zeta;
  }

  auto finish = [&](SolveStatus st, int iters) {
    ConicSolution sol;
    sol.status = st;
    sol.primal = unflatten(lay, prog.cone, x);
    sol.dual.assign(m_in, 0.0);
    for (int k = 0; k < m; ++k) sol.dual[row_index[k]] = y[k] * row_scale[row_index[k]];
    sol.objective_value = -dot(c, x);
    sol.dual_objective_value = -dot(b, y);
    sol.iterations = iters;
    return sol;
  };

  // Best iterate so far; returned at a relaxed tolerance when the final
  // digits are unreachable (stalls near a degenerate optimum).
  std::vector<double> best_x, best_y;
  double best_metric = std::numeric_limits<double>::max();
  double best_gap = 0.0, best_rp = 0.0, best_rd = 0.0;
  auto fail_or_best = [&](int iters) {
    const double relaxed = std::max(1e-6, opts.gap_tol);
    if (best_metric <= relaxed) {
      x = best_x;
      y = best_y;
      ConicSolution sol = finish(SolveStatus::Optimal, iters);
      sol.gap = best_gap;
      sol.primal_residual = best_rp;
      sol.dual_residual = best_rd;
      return sol;
    }
    return finish(SolveStatus::NumericalFailure, iters);
  };

  const double eta = 0.98;  // fraction-to-boundary
  int iter = 0;
  for (; iter < opts.iter_cap; ++iter) {
    // Residuals.
    std::vector<double> rp(m), rd(d);
    for (int k = 0; k < m; ++k) rp[k] = b[k] - dot(arows[k], x);
    for (int j = 0; j < d; ++j) {
      double aty = 0.0;
      for (int k = 0; k < m; ++k) aty += arows[k][j] * y[k];
      rd[j] = c[j] - aty - s[j];
    }
    const double pobj = dot(c, x);
    const double dobj = dot(b, y);
    // With large multipliers on near-degenerate rows the objective gap is
    // contaminated by rp^T y; complementarity x^T s is then the sharper
    // optimality measure.
    const double denom = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double rel_gap =
        std::min(std::abs(pobj - dobj), std::abs(dot(x, s))) / denom;
    const double rp_rel = norm2(rp) / (1.0 + bn);
    const double rd_rel = norm2(rd) / (1.0 + cn);
    if (opts.verbose)
      std::fprintf(stderr, "it %3d  pobj % .6e dobj % .6e rp %.2e rd %.2e\n",
                   iter, -pobj, -dobj, rp_rel, rd_rel);
    const double metric = std::max({rp_rel, rd_rel, rel_gap});
    if (metric < best_metric) {
      best_metric = metric;
      best_x = x;
      best_y = y;
      best_gap = rel_gap;
      best_rp = rp_rel;
      best_rd = rd_rel;
    }
    if (rp_rel <= opts.feas_tol && rd_rel <= opts.feas_tol &&
        rel_gap <= opts.gap_tol) {
      ConicSolution sol = finish(SolveStatus::Optimal, iter);
      sol.gap = rel_gap;
      sol.primal_residual = rp_rel;
      sol.dual_residual = rd_rel;
      return sol;
    }

    // Divergence-driven infeasibility certificates.
    const double yn = norm2(y);
    if (yn > 1e7) {
      std::vector<double> z(d);
      for (int j = 0; j < d; ++j) {
        double aty = 0.0;
        for (int k = 0; k < m; ++k) aty += arows[k][j] * y[k];
        z[j] = -aty / yn;
      }
      if (cone_dist(lay, z) <= 1e-7 && dot(b, y) / yn >= 1e-7) {
        ConicSolution sol = finish(SolveStatus::PrimalInfeasible, iter);
        sol.certificate = sol.dual;
        return sol;
      }
    }
    if (pobj < -1e7 * (1.0 + cn)) {
      const double xn = norm2(x);
      std::vector<double> ax(m);
      double axn = 0.0;
      for (int k = 0; k < m; ++k) {
        ax[k] = dot(arows[k], x) / xn;
        axn += ax[k] * ax[k];
      }
      if (std::sqrt(axn) <= 1e-7 && pobj / xn <= -1e-7) {
        ConicSolution sol = finish(SolveStatus::DualInfeasible, iter);
        sol.certificate = x;
        for (double& v : sol.certificate) v /= xn;
        return sol;
      }
    }

    NtState nt;
    if (!make_nt(lay, x, s, &nt)) return fail_or_best(iter);
    const double mu = dot(x, s) / lay.nu;
    if (!std::isfinite(mu) || mu < 0) return fail_or_best(iter);

    // Normal-equation matrix M = A H A^T.
    std::vector<std::vector<double>> ha(m);
    for (int k = 0; k < m; ++k) ha[k] = apply_h(lay, nt, arows[k]);
    Mat M(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const double v = dot(arows[i], ha[j]);
        M[i * m + j] = v;
        M[j * m + i] = v;
      }

    auto solve_dirs = [&](const std::vector<double>& rc,
                          std::vector<double>* dx, std::vector<double>* dy,
                          std::vector<double>* ds) -> bool {
      std::vector<double> rhs(m);
      std::vector<double> hrd = apply_h(lay, nt, rd);
      for (int k = 0; k < m; ++k)
        rhs[k] = rp[k] - dot(arows[k], rc) + dot(arows[k], hrd);
      if (m > 0) {
        if (!chol_solve(m, M, rhs, dy)) return false;
      } else {
        dy->clear();
      }
      ds->assign(d, 0.0);
      for (int j = 0; j < d; ++j) {
        double aty = 0.0;
        for (int k = 0; k < m; ++k) aty += arows[k][j] * (*dy)[k];
        (*ds)[j] = rd[j] - aty;
      }
      std::vector<double> hds = apply_h(lay, nt, *ds);
      dx->assign(d, 0.0);
      for (int j = 0; j < d; ++j) (*dx)[j] = rc[j] - hds[j];
      return true;
    };

    // Predictor (affine scaling direction): rc = -x.
    std::vector<double> rc_aff(d);
    for (int j = 0; j < d; ++j) rc_aff[j] = -x[j];
    std::vector<double> dxa, dya, dsa;
    if (!solve_dirs(rc_aff, &dxa, &dya, &dsa)) return fail_or_best(iter);
    const double apa = max_step(lay, x, dxa, 1.0);
    const double ada = max_step(lay, s, dsa, 1.0);
    double gap_aff = 0.0;
    for (int j = 0; j < d; ++j)
      gap_aff += (x[j] + apa * dxa[j]) * (s[j] + ada * dsa[j]);
    const double sigma = std::clamp(
        std::pow(std::max(gap_aff, 0.0) / dot(x, s), 3.0), 1e-12, 1.0);

    // Corrector with Mehrotra second-order term, assembled in the scaled
    // space where the complementarity equation is a Lyapunov solve.
    std::vector<double> rc(d, 0.0);
    for (size_t bidx = 0; bidx < lay.psd.size(); ++bidx) {
      const auto& blk = lay.psd[bidx];
      SymMatrix DXa = svec_out(blk.n, dxa.data() + blk.offset);
      SymMatrix DSa = svec_out(blk.n, dsa.data() + blk.offset);
      SymMatrix dlx = congruence(blk.n, nt.winvhalf[bidx], DXa);
      SymMatrix dls = congruence(blk.n, nt.whalf[bidx], DSa);
      // Rc = sigma mu I - lam^2 - sym(dlx dls)
      Mat prod = mat_mul(blk.n, sym_to_mat(dlx), sym_to_mat(dls));
      SymMatrix corr = mat_to_sym(blk.n, prod);
      Mat lam2 = mat_mul(blk.n, sym_to_mat(nt.lam[bidx]),
                         sym_to_mat(nt.lam[bidx]));
      SymMatrix R(blk.n);
      SymMatrix lam2s = mat_to_sym(blk.n, lam2);
      for (int i = 0; i < blk.n; ++i)
        for (int j = i; j < blk.n; ++j) {
          double v = -lam2s(i, j) - corr(i, j);
          if (i == j) v += sigma * mu;
          R.set(i, j, v);
        }
      SymMatrix sol_l = lyapunov_solve(nt.lam_eig[bidx], R);
      SymMatrix rcm = congruence(blk.n, nt.whalf[bidx], sol_l);
      svec_into(rcm, rc.data() + blk.offset);
    }
    for (int i = 0; i < lay.nonneg_len; ++i) {
      const int j = lay.nonneg_offset + i;
      const double w = std::sqrt(nt.w2[i]);
      const double lam = nt.lam_nn[i];
      const double dlx = dxa[j] / w;
      const double dls = dsa[j] * w;
      rc[j] = w * (sigma * mu - lam * lam - dlx * dls) / lam;
    }

    std::vector<double> dx, dy, ds;
    if (!solve_dirs(rc, &dx, &dy, &ds)) return fail_or_best(iter);
    const double ap = std::min(1.0, eta * max_step(lay, x, dx,
                                                   std::numeric_limits<double>::max()));
    const double ad = std::min(1.0, eta * max_step(lay, s, ds,
                                                   std::numeric_limits<double>::max()));
    if (opts.verbose)
      std::fprintf(stderr, "      mu %.2e sigma %.2e ap %.2e ad %.2e\n", mu,
                   sigma, ap, ad);
    for (int j = 0; j < d; ++j) {
      x[j] += ap * dx[j];
      s[j] += ad * ds[j];
    }
    for (int k = 0; k < m; ++k) y[k] += ad * dy[k];
  }

  // Iteration cap exhausted: fall back to the best iterate if it is good
  // enough, otherwise report failure rather than a vacuous answer.
  return fail_or_best(iter);
}

}  // namespace prosdp
