#ifndef QS_ORACLES_HPP
#define QS_ORACLES_HPP

#include <vector>

#include "qs/euclid.hpp"
#include "qs/random.hpp"
#include "qs/sphere.hpp"

namespace qs {

// Upper-bound estimator of containment_radius: min over n_dirs random unit
// directions of the support function. Shares no code with facet enumeration.
double mc_containment_radius(const EuclideanPointSet& Q, int n_dirs, RandomSource& rng);

// Samples the cap uniformly and tests spherical-hull membership for every
// sample (via nonnegative least squares, independent of the engine paths).
// One-sided: can only refute containment.
bool mc_cap_contained(const SphericalPointSet& C, const Cap& cap, int n_samples,
                      RandomSource& rng, double margin = 1e-6);

struct BestSubset {
  std::vector<int> indices;
  double score = 0.0;
};

// Ground-truth reference: enumerate all subsets of size <= k and score each
// with the Monte-Carlo radius estimator (shared direction set, 10^4 draws).
BestSubset exhaustive_best_subset(const EuclideanPointSet& Q, int k, RandomSource& rng);

// Spherical variant on S^2: scores a subset by the largest cap about the
// axis whose 10^4 canonical samples all pass the membership test.
BestSubset exhaustive_best_subset(const SphericalPointSet& C, const Eigen::VectorXd& axis,
                                  int k, RandomSource& rng);

namespace detail {
// min ||A*lam - y|| over lam >= 0 (Lawson-Hanson); returns the residual norm.
double nnls_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, int max_iter = 200);
}  // namespace detail

}  // namespace qs

#endif
