// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#include "polycover/lp.hpp"

#include <cmath>
#include <vector>

#include "polycover/errors.hpp"

namespace polycover {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kOptTol = 1e-9;
constexpr double kFeasTol = 1e-7;

// Dense tableau simplex over the standard form
//   min cᵀx  s.t.  Ax = b,  x ≥ 0,  b ≥ 0,
// with an explicit basis. Dantzig pricing, switching to Bland's rule after a
// degenerate stall so termination is guaranteed.
class Tableau {
 public:
  Tableau(Eigen::MatrixXd A, Eigen::VectorXd b, int num_cols)
      : m_(static_cast<int>(A.rows())), n_(num_cols) {
    T_.resize(m_ + 1, n_ + 1);
    T_.setZero();
    T_.topLeftCorner(m_, n_) = A;
    T_.block(0, n_, m_, 1) = b;
    basis_.resize(m_, -1);
  }

  int rows() const { return m_; }
  double rhs(int i) const { return T_(i, n_); }
  int basis(int i) const { return basis_[i]; }
  void set_basis(int i, int j) { basis_[i] = j; }

  void set_objective(const Eigen::VectorXd& cost) {
    T_.row(m_).head(n_) = cost.transpose();
    T_(m_, n_) = 0.0;
    // Price out the current basis.
    for (int i = 0; i < m_; ++i) {
      const int j = basis_[i];
      const double cj = T_(m_, j);
      if (cj != 0.0) T_.row(m_) -= cj * T_.row(i);
    }
  }

  double objective_value() const { return -T_(m_, n_); }

  void pivot(int row, int col) {
    T_.row(row) /= T_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = T_(i, col);
      if (f != 0.0) T_.row(i) -= f * T_.row(row);
    }
    basis_[row] = col;
  }

  // Optimizes the current objective over columns [0, active_cols).
  // Returns false when unbounded.
  bool run(int active_cols) {
    int stall = 0;
    const int stall_limit = 4 * (m_ + n_) + 64;
    bool bland = false;
    long iterations = 0;
    const long iter_limit = 8000L * (m_ + n_ + 16);
    while (true) {
      if (++iterations > iter_limit) {
        throw SolverError("simplex iteration limit exceeded");
      }
      int col = -1;
      if (bland) {
        for (int j = 0; j < active_cols; ++j) {
          if (T_(m_, j) < -kOptTol) {
            col = j;
            break;
          }
        }
      } else {
        double best = -kOptTol;
        for (int j = 0; j < active_cols; ++j) {
          if (T_(m_, j) < best) {
            best = T_(m_, j);
            col = j;
          }
        }
      }
      if (col < 0) return true;  // optimal

      int row = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double a = T_(i, col);
        if (a > kPivotTol) {
          const double ratio = T_(i, n_) / a;
          if (row < 0 || ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && basis_[i] < basis_[row])) {
            row = i;
            best_ratio = ratio;
          }
        }
      }
      if (row < 0) return false;  // unbounded

      const double before = T_(m_, n_);
      pivot(row, col);
      if (std::abs(T_(m_, n_) - before) <= 1e-13 * (1.0 + std::abs(before))) {
        if (++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
    }
  }

  Eigen::MatrixXd& data() { return T_; }

 private:
  int m_, n_;
  Eigen::MatrixXd T_;
  std::vector<int> basis_;
};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

LpProblem LpProblem::feasibility(const Eigen::MatrixXd& A,
                                 const Eigen::VectorXd& b) {
  LpProblem p;
  p.c = Eigen::VectorXd::Zero(A.cols());
  p.A = A;
  p.b = b;
  return p;
}

LpProblem LpProblem::minimize(const Eigen::VectorXd& c,
                              const Eigen::MatrixXd& A,
                              const Eigen::VectorXd& b) {
  LpProblem p;
  p.c = c;
  p.A = A;
  p.b = b;
  return p;
}

LpResult lp_solve(const LpProblem& p) {
  const int k = static_cast<int>(p.c.size());
  const int m_in = static_cast<int>(p.A.rows());
  if (p.A.cols() != k || p.b.size() != m_in) {
    throw DimensionError("lp_solve: inconsistent problem dimensions");
  }
  if (!p.c.allFinite() || !p.A.allFinite() || !p.b.allFinite()) {
    throw SolverError("lp_solve: non-finite problem data");
  }

  const double inf = LpProblem::kInf;
  Eigen::VectorXd lo = p.lower.size() ? p.lower
                                      : Eigen::VectorXd::Constant(k, -inf);
  Eigen::VectorXd hi = p.upper.size() ? p.upper
                                      : Eigen::VectorXd::Constant(k, inf);
  if (lo.size() != k || hi.size() != k) {
    throw DimensionError("lp_solve: bound size mismatch");
  }
  for (int j = 0; j < k; ++j) {
    if (finite(lo[j]) && finite(hi[j]) && lo[j] > hi[j]) {
      return {LpStatus::Infeasible, {}, 0.0};
    }
  }

  // Standard-form columns. Shifted/flipped variables map back through
  // (scale, offset, split partner).
  struct VarMap {
    int col;        // primary column
    int neg_col;    // second column of a free split, or -1
    double scale;   // +1 or -1
    double offset;
  };
  std::vector<VarMap> vmap(k);
  int cols = 0;
  std::vector<std::pair<int, double>> upper_rows;  // (var index, range)
  for (int j = 0; j < k; ++j) {
    if (finite(lo[j])) {
      vmap[j] = {cols++, -1, 1.0, lo[j]};
      if (finite(hi[j])) upper_rows.push_back({j, hi[j] - lo[j]});
    } else if (finite(hi[j])) {
      vmap[j] = {cols++, -1, -1.0, hi[j]};  // x = hi − x'
    } else {
      vmap[j] = {cols, cols + 1, 1.0, 0.0};
      cols += 2;
    }
  }

  const int m = m_in + static_cast<int>(upper_rows.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, cols);
  Eigen::VectorXd b(m);
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols);
  double cost_offset = 0.0;

  for (int j = 0; j < k; ++j) {
    const VarMap& v = vmap[j];
    for (int i = 0; i < m_in; ++i) {
      A(i, v.col) += p.A(i, j) * v.scale;
      if (v.neg_col >= 0) A(i, v.neg_col) -= p.A(i, j);
    }
    cost[v.col] += p.c[j] * v.scale;
    if (v.neg_col >= 0) cost[v.neg_col] -= p.c[j];
    cost_offset += p.c[j] * v.offset;
  }
  for (int i = 0; i < m_in; ++i) {
    double shift = 0.0;
    for (int j = 0; j < k; ++j) shift += p.A(i, j) * vmap[j].offset;
    b[i] = p.b[i] - shift;
  }
  for (std::size_t r = 0; r < upper_rows.size(); ++r) {
    const int i = m_in + static_cast<int>(r);
    A(i, vmap[upper_rows[r].first].col) = 1.0;
    b[i] = upper_rows[r].second;
  }

  // Slack per row; rows with negative rhs are negated and get an artificial.
  const int n_slack = m;
  std::vector<int> art_of_row(m, -1);
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0.0) art_of_row[i] = n_art++;
  }
  const int total = cols + n_slack + n_art;

  Eigen::MatrixXd Afull = Eigen::MatrixXd::Zero(m, total);
  Eigen::VectorXd bfull(m);
  for (int i = 0; i < m; ++i) {
    const double sgn = (b[i] < 0.0) ? -1.0 : 1.0;
    Afull.row(i).head(cols) = sgn * A.row(i);
    Afull(i, cols + i) = sgn;  // slack
    if (art_of_row[i] >= 0) Afull(i, cols + n_slack + art_of_row[i]) = 1.0;
    bfull[i] = sgn * b[i];
  }

  Tableau tab(Afull, bfull, total);
  for (int i = 0; i < m; ++i) {
    tab.set_basis(i, art_of_row[i] >= 0 ? cols + n_slack + art_of_row[i]
                                        : cols + i);
  }

  if (n_art > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
    phase1.tail(n_art).setOnes();
    tab.set_objective(phase1);
    if (!tab.run(cols + n_slack + n_art)) {
      throw SolverError("lp_solve: phase-1 unbounded (internal error)");
    }
    if (tab.objective_value() > kFeasTol) {
      return {LpStatus::Infeasible, {}, 0.0};
    }
    // Pivot any artificial still in the basis out at level zero.
    for (int i = 0; i < m; ++i) {
      if (tab.basis(i) >= cols + n_slack) {
        int col = -1;
        for (int j = 0; j < cols + n_slack; ++j) {
          if (std::abs(tab.data()(i, j)) > 1e-7) {
            col = j;
            break;
          }
        }
        if (col >= 0) {
          tab.pivot(i, col);
        }
        // else: redundant row; the artificial stays basic at zero, which is
        // harmless once its column is excluded from pricing below.
      }
    }
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(total);
  phase2.head(cols) = cost;
  tab.set_objective(phase2);
  if (!tab.run(cols + n_slack)) {
    return {LpStatus::Unbounded, {}, 0.0};
  }

  Eigen::VectorXd xstd = Eigen::VectorXd::Zero(total);
  for (int i = 0; i < m; ++i) {
    xstd[tab.basis(i)] = tab.rhs(i);
  }
  Eigen::VectorXd x(k);
  for (int j = 0; j < k; ++j) {
    const VarMap& v = vmap[j];
    double val = v.scale * xstd[v.col] + v.offset;
    if (v.neg_col >= 0) val -= xstd[v.neg_col];
    x[j] = val;
  }
  return {LpStatus::Optimal, x, p.c.dot(x)};
}

}  // namespace polycover
