#include "qs/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qs/lp.hpp"

namespace qs {

namespace {

constexpr double kPi = std::numbers::pi;

EuclideanPointSet project_rescaled(const SphericalPointSet& C, double rho) {
  const double t = std::tan(rho);
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(C.size());
  for (const auto& c : C.points) pts.push_back(central_project(c) / t);
  return make_point_set(C.sphere_dim(), std::move(pts));
}

SteinitzCertificate run_selector(const EuclideanPointSet& Q) {
  return Q.size() <= guards().exact_max_points ? select_exact(Q) : select_greedy(Q);
}

// Chebyshev center of {z : <z, a_i> <= b_i}: maximize the minimum slack
// distance; the section is bounded under the cap premise.
Eigen::VectorXd chebyshev_center(const std::vector<Eigen::VectorXd>& a,
                                 const std::vector<double>& b, int d) {
  const int n = static_cast<int>(a.size());
  const int nv = 2 * d + 1 + n;  // p = u - v, t, slack per row
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, nv);
  Eigen::VectorXd rhs(n);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
  c(2 * d) = -1.0;
  for (int i = 0; i < n; ++i) {
    A.block(i, 0, 1, d) = a[i].transpose();
    A.block(i, d, 1, d) = -a[i].transpose();
    A(i, 2 * d) = a[i].norm();
    A(i, 2 * d + 1 + i) = 1.0;
    rhs(i) = b[i];
  }
  const auto res = lp::solve(A, rhs, c);
  if (res.status != lp::Status::optimal)
    throw std::runtime_error("projected cone section admits no center");
  if (-res.objective < 1e-12)
    throw std::runtime_error("projected cone section has empty interior");
  return res.x.head(d) - res.x.segment(d, d);
}

}  // namespace

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::full_sphere: return "full_sphere";
    case CaseTag::northern: return "northern";
    default: return "general";
  }
}

void LemmaScalars::validate() const {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  if (!(rho > 0.0 && rho < kPi / 2)) throw std::invalid_argument("rho must lie in (0, pi/2)");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in (0, 1]");
}

double certified_cap_radius(double rho, double r) {
  if (!(rho > 0.0 && rho < kPi / 2)) throw PremiseViolated("rho must lie in (0, pi/2)");
  if (!(r > 0.0 && r <= 1.0)) throw PremiseViolated("r must lie in (0, 1]");
  return kPi / 2 - std::atan(1.0 / (std::tan(rho) * r));
}

bool tan_bounds_hold(double t) {
  if (!(t > 0.0 && t < kPi / 2)) throw std::invalid_argument("t must lie in (0, pi/2)");
  if (t > std::tan(t)) return false;
  if (t < kPi / 4 && std::tan(t) > 2.0 * t) return false;
  return true;
}

SphericalCertificate select_spherical(const SphericalPointSet& C, double rho) {
  C.validate();
  const int D = C.ambient_dim;
  const int d = D - 1;
  if (!(rho > 0.0 && rho < kPi / 2)) throw PremiseViolated("rho must lie in (0, pi/2)");
  const Eigen::VectorXd north = C.north();
  const double premise_cap = largest_cap_about_axis(C, north);
  if (premise_cap < rho - tol::premise)
    throw PremiseViolated("scap(north, rho) is not contained in sconv(C): largest cap " +
                          std::to_string(premise_cap));

  SphericalCertificate cert;

  if (spolar_empty(C)) {
    // (a) the hull is the whole sphere; Caratheodory in the ambient space
    std::vector<Eigen::VectorXd> amb(C.points.begin(), C.points.end());
    cert.indices = caratheodory_select(make_point_set(D, std::move(amb)));
    cert.case_tag = CaseTag::full_sphere;
    cert.certified_cap = kPi;
    cert.achieved_cap = largest_cap_about_axis(C.subset(cert.indices), north);
    if (cert.achieved_cap < cert.certified_cap - tol::premise)
      throw std::runtime_error("full-sphere selection failed re-verification");
    return cert;
  }

  bool northern_case = true;
  for (const auto& c : C.points) northern_case = northern_case && c(D - 1) > 1e-9;

  if (northern_case) {
    // (b) project to H_N, rescale the premise ball to radius 1, select there
    const EuclideanPointSet Q = project_rescaled(C, rho);
    const SteinitzCertificate inner = run_selector(Q);
    const double r_eff = std::min(inner.achieved_radius, 1.0);
    cert.indices = inner.indices;
    cert.case_tag = CaseTag::northern;
    cert.internal_radius = r_eff;
    cert.certified_cap = std::atan(r_eff * std::tan(rho));
  } else {
    // (c) halfspaces P_N(spolar(c) cap S^d_N) = {z : <z, -cbar> <= c_D}
    cert.case_tag = CaseTag::general;
    std::vector<Eigen::VectorXd> a;
    std::vector<double> b;
    for (const auto& c : C.points) {
      a.push_back(-c.head(d));
      b.push_back(c(D - 1));
    }
    const bool origin_ok =
        std::all_of(b.begin(), b.end(), [](double v) { return v > 1e-12; });
    if (origin_ok) {
      // polar-point form about the H_N origin, premise scale cot(rho)
      std::vector<Eigen::VectorXd> L;
      for (int i = 0; i < static_cast<int>(a.size()); ++i)
        L.push_back(a[i] / (b[i] * std::tan(rho)));
      const QhtResult qht = qht_select(make_point_set(d, std::move(L)));
      const double r_eff = std::min(qht.inner.achieved_radius, 1.0);
      cert.indices = qht.indices;
      cert.internal_radius = r_eff;
      cert.certified_cap = certified_cap_radius(rho, r_eff);
      cert.polarity_center_shifted = false;
    } else {
      // some halfspace excludes the H_N origin: re-center polarity at the
      // deepest interior point p and certify through the triangle bound
      const Eigen::VectorXd p = chebyshev_center(a, b, d);
      const double Rp = 1.0 / std::tan(rho) + p.norm();
      std::vector<Eigen::VectorXd> L;
      for (int i = 0; i < static_cast<int>(a.size()); ++i)
        L.push_back(a[i] * (Rp / (b[i] - p.dot(a[i]))));
      const QhtResult qht = qht_select(make_point_set(d, std::move(L)));
      const double rstar = qht.inner.achieved_radius;
      cert.indices = qht.indices;
      cert.internal_radius = rstar;
      cert.certified_cap =
          std::max(0.0, kPi / 2 - std::atan(p.norm() + Rp / rstar));
      cert.polarity_center_shifted = true;
    }
  }

  cert.achieved_cap = largest_cap_about_axis(C.subset(cert.indices), north);
  if (cert.achieved_cap < cert.certified_cap - tol::premise)
    throw std::runtime_error("selection failed cap re-verification: achieved " +
                             std::to_string(cert.achieved_cap) + " < certified " +
                             std::to_string(cert.certified_cap));
  return cert;
}

double gamma_consistency_probe(const SphericalPointSet& C, double rho_small) {
  C.validate();
  if (rho_small > 0.01 + 1e-15 || rho_small <= 0.0)
    throw PremiseViolated("probe requires rho_small in (0, 0.01]");
  for (const auto& c : C.points)
    if (c(C.ambient_dim - 1) <= 1e-9)
      throw PremiseViolated("probe requires a strictly northern instance");
  const SphericalCertificate cert = select_spherical(C, rho_small);
  const SteinitzCertificate inner = run_selector(project_rescaled(C, rho_small));
  return cert.achieved_cap / rho_small - inner.achieved_radius;
}

}  // namespace qs
