#ifndef QS_TESTS_HELPERS_HPP
#define QS_TESTS_HELPERS_HPP

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qs/euclid.hpp"
#include "qs/random.hpp"
#include "qs/sphere.hpp"

namespace th {

inline Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline qs::EuclideanPointSet pts(int dim,
                                 std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Eigen::VectorXd> p;
  for (const auto& r : rows) p.push_back(vec(r));
  return qs::make_point_set(dim, std::move(p));
}

inline qs::SphericalPointSet spts(int ambient,
                                  std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Eigen::VectorXd> p;
  for (const auto& r : rows) p.push_back(vec(r));
  return qs::make_spherical(ambient, std::move(p));
}

// +-e_j scaled by `radius` in R^dim
inline qs::EuclideanPointSet cross_polytope(int dim, double radius = 1.0) {
  std::vector<Eigen::VectorXd> p;
  for (int j = 0; j < dim; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
      v(j) = sgn * radius;
      p.push_back(v);
    }
  }
  return qs::make_point_set(dim, std::move(p));
}

// n random points plus a cross-polytope at `anchor`, so B(o,1) is covered
// whenever anchor >= sqrt(dim).
inline qs::EuclideanPointSet random_covering(int dim, int n_random, double anchor,
                                             qs::RandomSource& rng) {
  std::vector<Eigen::VectorXd> p;
  for (int j = 0; j < dim; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
      v(j) = sgn * anchor;
      p.push_back(v);
    }
  }
  for (int i = 0; i < n_random; ++i) p.push_back(rng.unit_vector(dim) * rng.uniform(1.2, 3.0));
  return qs::make_point_set(dim, std::move(p));
}

// 2*dim points (sin(theta) * +-e_j, cos(theta)) on S^dim
inline qs::SphericalPointSet ring(int dim, double colatitude) {
  const int D = dim + 1;
  std::vector<Eigen::VectorXd> p;
  for (int j = 0; j < dim; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(D);
      v(j) = sgn * std::sin(colatitude);
      v(D - 1) = std::cos(colatitude);
      p.push_back(v);
    }
  }
  return qs::make_spherical(D, std::move(p));
}

// unit vector at given colatitude from the pole of S^dim, azimuth via w
inline Eigen::VectorXd at_colatitude(int dim, double colatitude, const Eigen::VectorXd& w) {
  const int D = dim + 1;
  Eigen::VectorXd v(D);
  v.head(dim) = std::sin(colatitude) * w;
  v(D - 1) = std::cos(colatitude);
  return v;
}

// largest cap of the 2d-point ring about the pole: arctan(tan(colat)/sqrt(d))
inline double ring_cap(int dim, double colatitude) {
  return std::atan(std::tan(colatitude) / std::sqrt(static_cast<double>(dim)));
}

}  // namespace th

#endif
