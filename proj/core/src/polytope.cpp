// Copyright 2026 The tropicurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropicurv/polytope.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace tropicurv {
namespace {

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Smallest double-representable rational q with q^2 >= s.
Rational SqrtUpper(const Rational& s) {
  if (s == 0) return 0;
  double d = std::sqrt(ToDouble(s));
  Rational q = FromDouble(d);
  while (q * q < s) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
    q = FromDouble(d);
  }
  return q;
}

// Solves M y = rhs for square nonsingular M.
RationalVector SolveSquare(RationalMatrix M, RationalVector rhs) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw DegenerateError("singular system");
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rational f = M[r][col] / M[col][col];
      for (std::size_t k = col; k < n; ++k) M[r][k] -= f * M[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= M[i][i];
  return rhs;
}

// x = x0 + N z parametrizes {E x = e}. The free variables of the reduced
// row echelon form are the z coordinates, so z = x[free] exactly.
struct AffineChart {
  RationalVector x0;
  RationalMatrix N;  // dim x k
  std::vector<std::size_t> free;
  RationalMatrix R;  // independent equality rows (reduced echelon form)
};

AffineChart MakeChart(const Polytope& poly) {
  const std::size_t n = poly.dim();
  RationalMatrix M = poly.E;
  RationalVector rhs = poly.e;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < M.size(); ++col) {
    std::size_t piv = row;
    while (piv < M.size() && M[piv][col] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[row]);
    std::swap(rhs[piv], rhs[row]);
    const Rational inv = 1 / M[row][col];
    for (auto& v : M[row]) v *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col] == 0) continue;
      const Rational f = M[r][col];
      for (std::size_t k = 0; k < n; ++k) M[r][k] -= f * M[row][k];
      rhs[r] -= f * rhs[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < M.size(); ++r) {
    if (rhs[r] != 0) throw DegenerateError("equality constraints are inconsistent");
  }
  M.resize(row);
  rhs.resize(row);

  AffineChart chart;
  chart.x0.assign(n, Rational(0));
  for (std::size_t r = 0; r < row; ++r) chart.x0[pivots[r]] = rhs[r];
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) chart.free.push_back(j);
  }
  chart.N.assign(n, RationalVector(chart.free.size(), Rational(0)));
  for (std::size_t k = 0; k < chart.free.size(); ++k) {
    chart.N[chart.free[k]][k] = 1;
    for (std::size_t r = 0; r < row; ++r) chart.N[pivots[r]][k] = -M[r][chart.free[k]];
  }
  chart.R = std::move(M);
  return chart;
}

// Orthogonal projection of g onto {d : R d = 0}.
RationalVector ProjectToHull(const RationalMatrix& R, const RationalVector& g) {
  if (R.empty()) return g;
  RationalMatrix RRt(R.size(), RationalVector(R.size()));
  RationalVector Rg(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (std::size_t j = 0; j < R.size(); ++j) RRt[i][j] = Dot(R[i], R[j]);
    Rg[i] = Dot(R[i], g);
  }
  const RationalVector y = SolveSquare(std::move(RRt), std::move(Rg));
  RationalVector p = g;
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) p[j] -= y[i] * R[i][j];
  }
  return p;
}

// Bland's-rule simplex on the dictionary D, in the layout of the classic
// compact tableau solver: rows 0..m-1 constraints, row m objective, row
// m+1 the phase-one objective; column n is the auxiliary variable and
// column n+1 the right-hand side.
class Simplex {
 public:
  Simplex(const RationalMatrix& A, const RationalVector& b, const RationalVector& c)
      : m_(b.size()), n_(c.size()), B_(m_), N_(n_ + 1), D_(m_ + 2, RationalVector(n_ + 2)) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) D_[i][j] = A[i][j];
      B_[i] = static_cast<long>(n_ + i);
      D_[i][n_] = -1;
      D_[i][n_ + 1] = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      N_[j] = static_cast<long>(j);
      D_[m_][j] = -c[j];
    }
    N_[n_] = -1;
    D_[m_ + 1][n_] = 1;
  }

  LpResult Solve() {
    LpResult out;
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i) {
      if (D_[i][n_ + 1] < D_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && D_[r][n_ + 1] < 0) {
      Pivot(r, n_);
      if (!Run(true) || D_[m_ + 1][n_ + 1] < 0) {
        out.status = LpResult::Status::kInfeasible;
        return out;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (B_[i] != -1) continue;
        for (std::size_t j = 0; j <= n_; ++j) {
          if (D_[i][j] != 0) {
            Pivot(i, j);
            break;
          }
        }
      }
    }
    if (!Run(false)) {
      out.status = LpResult::Status::kUnbounded;
      return out;
    }
    out.status = LpResult::Status::kOptimal;
    out.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (B_[i] >= 0 && static_cast<std::size_t>(B_[i]) < n_) out.x[B_[i]] = D_[i][n_ + 1];
    }
    out.value = D_[m_][n_ + 1];
    return out;
  }

 private:
  void Pivot(std::size_t r, std::size_t s) {
    const Rational inv = 1 / D_[r][s];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || D_[i][s] == 0) continue;
      const Rational f = D_[i][s] * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j) {
        if (j != s) D_[i][j] -= D_[r][j] * f;
      }
      D_[i][s] = -f;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j) {
      if (j != s) D_[r][j] *= inv;
    }
    D_[r][s] = inv;
    std::swap(B_[r], N_[s]);
  }

  bool Run(bool phase_one) {
    const std::size_t x = phase_one ? m_ + 1 : m_;
    while (true) {
      std::optional<std::size_t> s;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!phase_one && N_[j] == -1) continue;
        if (D_[x][j] < 0 && (!s || N_[j] < N_[*s])) s = j;
      }
      if (!s) return true;
      std::optional<std::size_t> r;
      for (std::size_t i = 0; i < m_; ++i) {
        if (D_[i][*s] <= 0) continue;
        if (!r) {
          r = i;
          continue;
        }
        const Rational lhs = D_[i][n_ + 1] / D_[i][*s];
        const Rational rhs = D_[*r][n_ + 1] / D_[*r][*s];
        if (lhs < rhs || (lhs == rhs && B_[i] < B_[*r])) r = i;
      }
      if (!r) return false;
      Pivot(*r, *s);
    }
  }

  std::size_t m_, n_;
  std::vector<long> B_, N_;
  RationalMatrix D_;
};

}  // namespace

std::size_t Polytope::dim() const {
  std::size_t n = 0;
  bool set = false;
  auto check = [&](const RationalMatrix& M) {
    for (const auto& row : M) {
      if (!set) {
        n = row.size();
        set = true;
      } else if (row.size() != n) {
        throw DimensionError("polytope rows have different lengths");
      }
    }
  };
  check(G);
  check(E);
  if (G.size() != h.size() || E.size() != e.size()) {
    throw DimensionError("polytope right-hand sides do not match the row count");
  }
  if (!set || n == 0) throw DimensionError("polytope has no variables");
  return n;
}

bool Polytope::Contains(const RationalVector& x) const {
  if (x.size() != dim()) throw DimensionError("point dimension does not match polytope");
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (Dot(G[i], x) > h[i]) return false;
  }
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (Dot(E[i], x) != e[i]) return false;
  }
  return true;
}

bool Polytope::StrictlyContains(const RationalVector& x) const {
  if (!Contains(x)) return false;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (Dot(G[i], x) == h[i]) return false;
  }
  return true;
}

LpResult MaximizeLp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  if (A.size() != b.size()) throw DimensionError("LP row count mismatch");
  for (const auto& row : A) {
    if (row.size() != c.size()) throw DimensionError("LP column count mismatch");
  }
  return Simplex(A, b, c).Solve();
}

RationalVector ChebyshevCenter(const Polytope& poly) {
  const std::size_t n = poly.dim();
  const AffineChart chart = MakeChart(poly);
  const std::size_t k = chart.free.size();
  if (k == 0) throw DegenerateError("the affine hull is a single point");

  // Variables (u, w, r) with z = u - w; maximize r subject to
  // (G N) z + ||P g_i|| r <= h - G x0.
  const std::size_t m = poly.G.size();
  RationalMatrix A(m, RationalVector(2 * k + 1));
  RationalVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational gn = 0;
      for (std::size_t t = 0; t < n; ++t) gn += poly.G[i][t] * chart.N[t][j];
      A[i][j] = gn;
      A[i][k + j] = -gn;
    }
    const RationalVector p = ProjectToHull(chart.R, poly.G[i]);
    A[i][2 * k] = SqrtUpper(Dot(p, p));
    b[i] = poly.h[i] - Dot(poly.G[i], chart.x0);
  }
  RationalVector c(2 * k + 1, Rational(0));
  c[2 * k] = 1;
  const LpResult lp = MaximizeLp(A, b, c);
  if (lp.status == LpResult::Status::kInfeasible) throw DegenerateError("polytope is empty");
  if (lp.status == LpResult::Status::kUnbounded) throw DomainError("polytope is unbounded");
  if (lp.value <= 0) throw DegenerateError("polytope has empty interior in its affine hull");

  RationalVector x = chart.x0;
  for (std::size_t j = 0; j < k; ++j) {
    const Rational z = lp.x[j] - lp.x[k + j];
    for (std::size_t t = 0; t < n; ++t) x[t] += chart.N[t][j] * z;
  }
  return x;
}

Chord ExactChord(const Polytope& poly, const RationalVector& x, const RationalVector& d) {
  const std::size_t n = poly.dim();
  if (x.size() != n || d.size() != n) throw DimensionError("chord vectors have wrong dimension");
  for (std::size_t i = 0; i < poly.E.size(); ++i) {
    if (Dot(poly.E[i], d) != 0) throw DomainError("direction leaves the affine hull");
  }
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < poly.G.size(); ++i) {
    const Rational gd = Dot(poly.G[i], d);
    if (gd == 0) continue;
    const Rational bound = (poly.h[i] - Dot(poly.G[i], x)) / gd;
    if (gd > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else if (!lo || bound > *lo) {
      lo = bound;
    }
  }
  if (!lo || !hi) throw DomainError("chord is unbounded");
  return {*lo, *hi};
}

std::vector<RationalVector> HitAndRun(const Polytope& poly, const RationalVector& x0,
                                      std::size_t count, const HitAndRunOptions& options,
                                      RngStream& rng) {
  const std::size_t n = poly.dim();
  if (x0.size() != n) throw DimensionError("start point has wrong dimension");
  if (!poly.StrictlyContains(x0)) throw DomainError("hit-and-run start point is not interior");
  if (options.thinning == 0) throw DomainError("thinning must be positive");
  const AffineChart chart = MakeChart(poly);
  const std::size_t k = chart.free.size();
  if (k == 0) throw DegenerateError("the affine hull is a single point");
  const std::size_t m = poly.G.size();

  // Chain state lives in z coordinates; A z <= b is the inequality block.
  Eigen::MatrixXd A(m, k);
  Eigen::VectorXd b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational gn = 0;
      for (std::size_t t = 0; t < n; ++t) gn += poly.G[i][t] * chart.N[t][j];
      A(i, j) = ToDouble(gn);
    }
    b(i) = ToDouble(poly.h[i] - Dot(poly.G[i], chart.x0));
  }
  // Projector onto the direction space of the affine hull.
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  if (!chart.R.empty()) {
    Eigen::MatrixXd R(chart.R.size(), n);
    for (std::size_t i = 0; i < chart.R.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) R(i, j) = ToDouble(chart.R[i][j]);
    }
    P -= R.transpose() * (R * R.transpose()).ldlt().solve(R);
  }

  Eigen::VectorXd z(k);
  for (std::size_t j = 0; j < k; ++j) z(j) = ToDouble(x0[chart.free[j]]);

  std::vector<RationalVector> out;
  out.reserve(count);
  Eigen::VectorXd g(n);
  Eigen::VectorXd dz(k);
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t step = 0;
  while (out.size() < count) {
    do {
      for (std::size_t t = 0; t < n; ++t) g(t) = rng.Normal();
      const Eigen::VectorXd d = P * g;
      for (std::size_t j = 0; j < k; ++j) dz(j) = d(chart.free[j]);
    } while (dz.squaredNorm() == 0);
    const Eigen::VectorXd ad = A * dz;
    const Eigen::VectorXd slack = b - A * z;
    double lo = -inf;
    double hi = inf;
    for (std::size_t i = 0; i < m; ++i) {
      if (ad(i) > 0) {
        hi = std::min(hi, slack(i) / ad(i));
      } else if (ad(i) < 0) {
        lo = std::max(lo, slack(i) / ad(i));
      }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("polytope is unbounded");
    if (lo > 0) lo = 0;
    if (hi < 0) hi = 0;
    z += (lo + (hi - lo) * rng.OpenUniformDouble()) * dz;
    ++step;

    if (step <= options.burn_in || (step - options.burn_in) % options.thinning != 0) continue;
    RationalVector x = chart.x0;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational zj = FromDouble(z(j));
      for (std::size_t t = 0; t < n; ++t) {
        if (chart.N[t][j] != 0) x[t] += chart.N[t][j] * zj;
      }
    }
    if (poly.StrictlyContains(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace tropicurv
