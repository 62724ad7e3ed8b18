#include "qs/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qs/lp.hpp"

namespace qs {

namespace {

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Eigen::MatrixXd points_matrix(const SphericalPointSet& C) {
  Eigen::MatrixXd M(C.ambient_dim, C.size());
  for (int i = 0; i < C.size(); ++i) M.col(i) = C.points[i];
  return M;
}

}  // namespace

Eigen::VectorXd SphericalPointSet::north() const {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(ambient_dim);
  e(ambient_dim - 1) = 1.0;
  return e;
}

SphericalPointSet SphericalPointSet::subset(const std::vector<int>& indices) const {
  SphericalPointSet out;
  out.ambient_dim = ambient_dim;
  for (int i : indices) out.points.push_back(points.at(i));
  return out;
}

void SphericalPointSet::validate() const {
  if (ambient_dim < 3) throw std::invalid_argument("sphere dimension must be >= 2");
  if (points.empty()) throw std::invalid_argument("spherical point set must be nonempty");
  for (const auto& p : points) {
    if (p.size() != ambient_dim) throw std::invalid_argument("point/dimension mismatch");
    if (std::abs(p.norm() - 1.0) > tol::unit_norm)
      throw std::invalid_argument("spherical point is not unit-normalized");
  }
}

SphericalPointSet make_spherical(int ambient_dim, std::vector<Eigen::VectorXd> points) {
  SphericalPointSet C;
  C.ambient_dim = ambient_dim;
  for (auto& p : points) {
    const double n = p.norm();
    if (n < 1e-9) throw std::invalid_argument("cannot normalize a near-zero vector");
    C.points.push_back(p / n);
  }
  C.validate();
  return C;
}

void Cap::validate() const {
  if (std::abs(axis.norm() - 1.0) > tol::unit_norm)
    throw std::invalid_argument("cap axis must be a unit vector");
  if (rho < 0.0 || rho > std::numbers::pi) throw std::invalid_argument("cap radius outside [0, pi]");
}

bool ConeRep::admits(const Eigen::VectorXd& x, double margin) const {
  for (const auto& c : generators)
    if (x.dot(c) <= margin) return false;
  return true;
}

Eigen::VectorXd central_project(const Eigen::VectorXd& x) {
  const int D = static_cast<int>(x.size());
  if (D < 2) throw std::invalid_argument("projection needs ambient dimension >= 2");
  const double last = x(D - 1);
  if (std::abs(last) < 1e-12)
    throw EquatorSingularity("central projection undefined near the equator");
  return x.head(D - 1) / last;
}

Eigen::VectorXd lift_north(const Eigen::VectorXd& z) {
  Eigen::VectorXd x(z.size() + 1);
  x.head(z.size()) = z;
  x(z.size()) = 1.0;
  return x / x.norm();
}

double cap_to_ball_radius(double rho) {
  if (rho < 0.0 || rho >= std::numbers::pi / 2)
    throw PremiseViolated("cap radius must lie in [0, pi/2) for projection");
  return std::tan(rho);
}

bool spolar_empty(const SphericalPointSet& C) {
  C.validate();
  // dual membership: spolar(C) empty iff o in conv(C), boundary counted as empty
  const Eigen::MatrixXd M = points_matrix(C);
  const Eigen::VectorXd lam =
      lp::l1_fit_nonneg(M, Eigen::VectorXd::Zero(C.ambient_dim), /*affine=*/true);
  return (M * lam).lpNorm<1>() <= tol::membership && std::abs(lam.sum() - 1.0) <= 1e-7;
}

bool in_spherical_hull(const SphericalPointSet& C, const Eigen::VectorXd& x) {
  C.validate();
  if (x.size() != C.ambient_dim) throw std::invalid_argument("query/dimension mismatch");
  if (spolar_empty(C)) return true;  // sconv(C) is the whole sphere
  // inside an open hemisphere, sconv = conical hull: x = sum lambda_i c_i, lambda >= 0
  const Eigen::MatrixXd M = points_matrix(C);
  const Eigen::VectorXd lam = lp::l1_fit_nonneg(M, x, /*affine=*/false);
  return (M * lam - x).lpNorm<1>() <= tol::membership;
}

std::vector<Eigen::VectorXd> extreme_rays(const SphericalPointSet& C) {
  C.validate();
  const int D = C.ambient_dim;
  const int n = C.size();
  check_enum_guard(n, D - 1, "extreme_rays");
  std::vector<Eigen::VectorXd> rays;
  if (n < D - 1) return rays;

  auto admissible = [&](const Eigen::VectorXd& v) {
    for (const auto& c : C.points)
      if (v.dot(c) < -tol::premise) return false;
    return true;
  };
  auto push_unique = [&](const Eigen::VectorXd& v) {
    for (const auto& r : rays)
      if (r.dot(v) > 1.0 - 1e-9) return;
    rays.push_back(v);
  };

  std::vector<int> comb(D - 1);
  std::iota(comb.begin(), comb.end(), 0);
  Eigen::MatrixXd A(D - 1, D);
  do {
    for (int r = 0; r < D - 1; ++r) A.row(r) = C.points[comb[r]].transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(D - 2) <= 0.0 || sv(0) > sv(D - 2) * tol::max_condition)
      continue;  // needs rank D-1 for a one-dimensional nullspace
    Eigen::VectorXd v = svd.matrixV().col(D - 1);
    v.normalize();
    if (admissible(v))
      push_unique(v);
    else if (admissible(-v))
      push_unique(-v);
  } while (next_combination(comb, n));
  return rays;
}

double largest_cap_about_axis(const SphericalPointSet& C, const Eigen::VectorXd& axis) {
  C.validate();
  if (axis.size() != C.ambient_dim) throw std::invalid_argument("axis/dimension mismatch");
  Eigen::VectorXd a = axis;
  const double an = a.norm();
  if (std::abs(an - 1.0) > 1e-9) throw std::invalid_argument("axis must be a unit vector");
  a /= an;

  if (spolar_empty(C)) return std::numbers::pi;
  if (!in_spherical_hull(C, a)) return 0.0;

  // a pointed spolar cone requires full-rank generators; otherwise it
  // contains a line and the cap collapses
  {
    Eigen::MatrixXd M = points_matrix(C);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(std::min<int>(C.ambient_dim, C.size()) - 1) <= sv(0) * 1e-9 ||
        C.size() < C.ambient_dim)
      return 0.0;
  }

  const auto rays = extreme_rays(C);
  if (rays.empty()) return 0.0;
  double worst = 0.0;
  for (const auto& v : rays)
    worst = std::max(worst, std::acos(std::clamp(v.dot(a), -1.0, 1.0)));
  return std::clamp(std::numbers::pi / 2 - worst, 0.0, std::numbers::pi);
}

}  // namespace qs
