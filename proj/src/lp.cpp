#include "qs/lp.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qs::lp {

namespace {

constexpr double kReducedCostEps = 1e-9;
constexpr double kPivotEps = 1e-11;
constexpr double kFeasEps = 1e-8;

// One simplex phase on the reduced tableau T = [B^{-1}A | B^{-1}b].
// Entering columns are restricted to j < n_enter (phase 2 locks artificials out).
// Bland's rule throughout: smallest eligible entering index, smallest basis
// index among ratio ties. Returns false on unboundedness.
bool run_phase(Eigen::MatrixXd& T, std::vector<int>& basis, const Eigen::VectorXd& cost,
               int n_enter, int& iter_budget) {
  const int m = static_cast<int>(T.rows());
  const int ncols = static_cast<int>(T.cols()) - 1;
  const int rhs = ncols;
  Eigen::VectorXd cb(m);
  while (true) {
    if (--iter_budget < 0) throw std::runtime_error("lp::solve: iteration budget exhausted");
    for (int i = 0; i < m; ++i) cb(i) = cost(basis[i]);
    // entering: smallest j with negative reduced cost
    int enter = -1;
    for (int j = 0; j < n_enter; ++j) {
      double r = cost(j) - cb.dot(T.col(j));
      if (r < -kReducedCostEps) { enter = j; break; }
    }
    if (enter < 0) return true;
    // ratio test; rows whose basic variable sits at zero leave first
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      double a = T(i, enter);
      if (a <= kPivotEps) continue;
      double ratio = T(i, rhs) / a;
      if (ratio < 0) ratio = 0;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded in the entering direction
    // pivot
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    basis[leave] = enter;
    for (int i = 0; i < m; ++i)
      if (T(i, rhs) < 0 && T(i, rhs) > -1e-11) T(i, rhs) = 0.0;
  }
}

}  // namespace

Result solve(const Eigen::MatrixXd& A0, const Eigen::VectorXd& b0, const Eigen::VectorXd& c,
             int max_iter) {
  const int m = static_cast<int>(A0.rows());
  const int n = static_cast<int>(A0.cols());
  if (b0.size() != m || c.size() != n)
    throw std::invalid_argument("lp::solve: inconsistent dimensions");

  // Row-scale and orient b >= 0 so the artificial basis is feasible.
  Eigen::MatrixXd A = A0;
  Eigen::VectorXd b = b0;
  for (int i = 0; i < m; ++i) {
    double s = std::max(A.row(i).cwiseAbs().maxCoeff(), std::abs(b(i)));
    if (s > 1e-300) { A.row(i) /= s; b(i) /= s; }
    if (b(i) < 0) { A.row(i) = -A.row(i); b(i) = -b(i); }
  }

  Eigen::MatrixXd T(m, n + m + 1);
  T.block(0, 0, m, n) = A;
  T.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(n + m) = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  int budget = max_iter;

  // Phase 1: minimize the artificial mass.
  Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(n + m);
  cost1.tail(m).setOnes();
  if (!run_phase(T, basis, cost1, n + m, budget))
    throw std::runtime_error("lp::solve: phase 1 unbounded");
  double art = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) art += T(i, n + m);
  Result res;
  if (art > kFeasEps) { res.status = Status::infeasible; return res; }

  // Drive leftover zero-level artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (std::abs(T(i, j)) > 1e-9) { piv = j; break; }
    if (piv < 0) continue;  // redundant row, artificial stays at zero level
    T.row(i) /= T(i, piv);
    for (int k = 0; k < m; ++k) {
      if (k == i) continue;
      double f = T(k, piv);
      if (f != 0.0) T.row(k) -= f * T.row(i);
    }
    basis[i] = piv;
  }

  // Phase 2 on the original objective; artificials may not re-enter.
  Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(n + m);
  cost2.head(n) = c;
  if (!run_phase(T, basis, cost2, n, budget)) {
    res.status = Status::unbounded;
    return res;
  }

  res.status = Status::optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x(basis[i]) = std::max(0.0, T(i, n + m));
  res.objective = c.dot(res.x);
  return res;
}

Eigen::VectorXd l1_fit_nonneg(const Eigen::MatrixXd& M, const Eigen::VectorXd& t, bool affine) {
  const int d = static_cast<int>(M.rows());
  const int k = static_cast<int>(M.cols());
  const int rows = d + (affine ? 1 : 0);
  // variables: lambda (k), s+ (d), s- (d)
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, k + 2 * d);
  Eigen::VectorXd b(rows);
  A.block(0, 0, d, k) = M;
  A.block(0, k, d, d) = Eigen::MatrixXd::Identity(d, d);
  A.block(0, k + d, d, d) = -Eigen::MatrixXd::Identity(d, d);
  b.head(d) = t;
  if (affine) {
    A.row(d).head(k).setOnes();
    b(d) = 1.0;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(k + 2 * d);
  c.tail(2 * d).setOnes();
  Result r = solve(A, b, c);
  if (r.status != Status::optimal) {
    // With free slacks the problem is infeasible only when affine and k == 0.
    return Eigen::VectorXd::Zero(k);
  }
  return r.x.head(k);
}

}  // namespace qs::lp
