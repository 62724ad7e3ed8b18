#ifndef QS_SPHERE_HPP
#define QS_SPHERE_HPP

#include <Eigen/Dense>
#include <vector>

#include "qs/common.hpp"

namespace qs {

// Points on S^d embedded in R^(d+1); indices are identities.
struct SphericalPointSet {
  int ambient_dim = 0;  // d+1, with d >= 2
  std::vector<Eigen::VectorXd> points;

  int size() const { return static_cast<int>(points.size()); }
  int sphere_dim() const { return ambient_dim - 1; }
  Eigen::VectorXd north() const;
  SphericalPointSet subset(const std::vector<int>& indices) const;
  void validate() const;
};

// Normalizes points on ingestion; rejects vectors of norm below 1e-9.
SphericalPointSet make_spherical(int ambient_dim, std::vector<Eigen::VectorXd> points);

// scap(axis, rho) = {u on the sphere : <u, axis> >= cos rho}
struct Cap {
  Eigen::VectorXd axis;
  double rho = 0.0;  // in [0, pi]
  void validate() const;
};

// spolar(C) = {x : <x, c_i> > 0 for all i}
struct ConeRep {
  std::vector<Eigen::VectorXd> generators;
  bool admits(const Eigen::VectorXd& x, double margin = tol::premise) const;
};

// (x_1/x_{d+1}, ..., x_d/x_{d+1}); EquatorSingularity when |x_{d+1}| < 1e-12.
Eigen::VectorXd central_project(const Eigen::VectorXd& x);

// (z, 1)/|(z, 1)|, the inverse of central_project on the northern hemisphere.
Eigen::VectorXd lift_north(const Eigen::VectorXd& z);

// tan(rho); caps about the pole project to balls of this radius.
// PremiseViolated outside [0, pi/2).
double cap_to_ball_radius(double rho);

// True iff no unit x has <x, c> > 0 for every c in C, decided via the dual
// membership o in conv(C); the boundary case counts as empty.
bool spolar_empty(const SphericalPointSet& C);

// Membership in sconv(C): the whole sphere when spolar_empty(C), otherwise
// conical-hull feasibility with residual tolerance 1e-9.
bool in_spherical_hull(const SphericalPointSet& C, const Eigen::VectorXd& x);

// Extreme rays of the closed cone {x : <x, c_i> >= 0}, unit-normalized,
// from nullspaces of (ambient-1)-subsets of active constraints.
std::vector<Eigen::VectorXd> extreme_rays(const SphericalPointSet& C);

// Radius of the largest cap about the axis inside sconv(C): pi when the hull
// is the whole sphere, 0 when the axis is outside, otherwise
// pi/2 - max angle(axis, extreme ray of spolar(C)).
double largest_cap_about_axis(const SphericalPointSet& C, const Eigen::VectorXd& axis);

}  // namespace qs

#endif
