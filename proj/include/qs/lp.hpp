#ifndef QS_LP_HPP
#define QS_LP_HPP

#include <Eigen/Dense>

namespace qs::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Eigen::VectorXd x;      // minimizer, valid when status == optimal
  double objective = 0.0; // c'x at the minimizer
};

// Minimize c'x subject to A x = b, x >= 0.
// Dense two-phase simplex with Bland's rule; deterministic for identical input.
Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
             int max_iter = 200000);

// Least-L1-deviation membership solve:
// minimize ||M lambda - t||_1 over lambda >= 0, optionally with sum(lambda) = 1.
// Returns lambda; the caller decides membership from the residual.
Eigen::VectorXd l1_fit_nonneg(const Eigen::MatrixXd& M, const Eigen::VectorXd& t, bool affine);

}  // namespace qs::lp

#endif
