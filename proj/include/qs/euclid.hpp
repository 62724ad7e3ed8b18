#ifndef QS_EUCLID_HPP
#define QS_EUCLID_HPP

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qs/common.hpp"

namespace qs {

// Finite point set in R^d with the origin as the distinguished center.
// Indices are the identity of points; duplicates are kept.
struct EuclideanPointSet {
  int dim = 0;
  std::vector<Eigen::VectorXd> points;
  std::vector<std::string> labels;  // empty, or aligned with points

  int size() const { return static_cast<int>(points.size()); }
  Eigen::MatrixXd matrix() const;  // dim x n, columns are points
  EuclideanPointSet subset(const std::vector<int>& indices) const;
  void validate() const;  // throws std::invalid_argument
};

EuclideanPointSet make_point_set(int dim, std::vector<Eigen::VectorXd> points,
                                 std::vector<std::string> labels = {});

struct OriginBall {
  double radius = 0.0;  // B(o, radius), radius >= 0
};

// {x : <x, normal> <= offset}; normal nonzero.
struct Halfspace {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

// True iff the origin lies in the interior of conv(Q), decided with a
// 1e-9 inscribed-ball witness margin (LP feasibility; no scale guard).
bool contains_origin_interior(const EuclideanPointSet& Q);

// Largest r with B(o,r) contained in conv(Q), by enumeration of supporting
// facet hyperplanes through affinely independent d-subsets.
// Throws PremiseViolated when the origin is not interior, ScaleLimit beyond guards.
double containment_radius(const EuclideanPointSet& Q);

// One halfspace {x : <x,s> <= 1} per point, order preserved.
std::vector<Halfspace> polar_points(const EuclideanPointSet& S);

// Smallest R with polar(L) inside B(o,R), by polar vertex enumeration.
// nullopt means polar(L) is unbounded (origin not interior to conv(L)).
std::optional<double> polar_max_norm(const EuclideanPointSet& L);

// Indices (ascending) of at most dim+1 points whose convex hull contains the
// origin. Throws PremiseViolated when o is not in conv(Q).
std::vector<int> caratheodory_select(const EuclideanPointSet& Q);

namespace detail {

// Inscribed-ball margin about the origin certified by a cross-polytope
// witness: largest eps with +-eps*e_j in conv(Q) for all j, divided by sqrt(d).
// Negative infinity when o is outside conv(Q).
double origin_margin(int dim, const std::vector<Eigen::VectorXd>& points);

// Convex-combination weights for target in conv(columns of M), or nullopt if
// the best L1 residual exceeds tol.
std::optional<Eigen::VectorXd> hull_membership(const Eigen::MatrixXd& M,
                                               const Eigen::VectorXd& target, double tol);

struct FacetScan {
  bool found = false;
  double radius = 0.0;              // min distance of a supporting facet from o
  Eigen::VectorXd critical_normal;  // unit outward normal of that facet
  // all supporting facets, ascending by distance (lexicographic subset order on ties)
  std::vector<std::pair<double, Eigen::VectorXd>> facets;
};

// Supporting-facet enumeration over affinely independent d-subsets.
// No guards or premise checks here; callers enforce them.
FacetScan facet_scan(int dim, const std::vector<Eigen::VectorXd>& points);

// Minimum of the support function over unit directions (infinity-norm faces),
// with a minimizing direction (Euclidean-normalized). Exact LP on each face.
std::pair<double, Eigen::VectorXd> min_support_direction(int dim,
                                                         const std::vector<Eigen::VectorXd>& points);

// Containment radius for any n via cutting planes on an active subset.
// Exact when the returned value is below stop_at; otherwise a certified lower
// bound (the active subset's radius never exceeds the full radius), letting
// threshold queries finish early. ScaleLimit if the active set outgrows the
// per-scan work budget.
double adaptive_containment_radius(const EuclideanPointSet& Q,
                                   double stop_at = std::numeric_limits<double>::infinity());

}  // namespace detail

}  // namespace qs

#endif
