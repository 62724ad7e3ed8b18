#include "qs/steinitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

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

// radius of conv(points) about o: 0 unless o is strictly interior
double subset_radius(int dim, const std::vector<Eigen::VectorXd>& pts) {
  // cheap reject: all points on one side of an axis hyperplane
  for (int j = 0; j < dim; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p(j));
      hi = std::max(hi, p(j));
    }
    if (lo > -tol::interior_margin || hi < tol::interior_margin) return 0.0;
  }
  if (detail::origin_margin(dim, pts) < tol::interior_margin) return 0.0;
  const detail::FacetScan fs = detail::facet_scan(dim, pts);
  return fs.found ? fs.radius : 0.0;
}

double exact_radius_any_n(const EuclideanPointSet& Q, double stop_at) {
  if (Q.size() <= guards().enum_max_points && Q.dim <= guards().enum_max_dim)
    return contains_origin_interior(Q) ? containment_radius(Q) : 0.0;
  return detail::adaptive_containment_radius(Q, stop_at);
}

void check_premise(const EuclideanPointSet& Q, double premise_radius, double radius) {
  if (radius < premise_radius - tol::premise)
    throw PremiseViolated("containment_radius " + std::to_string(radius) +
                          " below premise radius " + std::to_string(premise_radius));
}

}  // namespace

std::string to_string(SelectMethod m) {
  return m == SelectMethod::exact ? "exact" : "greedy";
}

RBound r_bound(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  return RBound{dim, 1.0 / (6.0 * dim * dim), 1.0 / (2.0 * std::sqrt(static_cast<double>(dim)))};
}

SteinitzCertificate select_exact(const EuclideanPointSet& Q, double premise_radius) {
  Q.validate();
  const int n = Q.size();
  const int d = Q.dim;
  if (n > guards().exact_max_points)
    throw ScaleLimit("select_exact supports at most " +
                     std::to_string(guards().exact_max_points) + " points");
  if (d > guards().enum_max_dim)
    throw ScaleLimit("select_exact supports dimension at most " +
                     std::to_string(guards().enum_max_dim));
  check_premise(Q, premise_radius, exact_radius_any_n(Q, premise_radius));

  const int m = std::min(2 * d, n);
  double best = -1.0;
  std::vector<int> best_idx;
  std::vector<Eigen::VectorXd> pts;
  // size ascending + lex within size; subsets below d+1 points have radius 0
  for (int k = std::min(d + 1, m); k <= m; ++k) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      pts.clear();
      for (int i : comb) pts.push_back(Q.points[i]);
      const double r = subset_radius(d, pts);
      const bool better = r > best + 1e-12;
      const bool tie = !better && r > best - 1e-12;
      if (better || (tie && std::lexicographical_compare(comb.begin(), comb.end(),
                                                         best_idx.begin(), best_idx.end()))) {
        best = r;
        best_idx = comb;
      }
    } while (next_combination(comb, n));
  }

  SteinitzCertificate cert;
  cert.indices = best_idx;
  cert.achieved_radius = std::max(best, 0.0);
  cert.method = SelectMethod::exact;
  cert.cardinality_bound = 2 * d;
  cert.premise_radius = premise_radius;
  return cert;
}

SteinitzCertificate select_greedy(const EuclideanPointSet& Q, double premise_radius) {
  Q.validate();
  const int n = Q.size();
  const int d = Q.dim;
  if (n > guards().greedy_max_points)
    throw ScaleLimit("select_greedy supports at most " +
                     std::to_string(guards().greedy_max_points) + " points");
  if (d > guards().enum_max_dim)
    throw ScaleLimit("select_greedy supports dimension at most " +
                     std::to_string(guards().enum_max_dim));
  check_premise(Q, premise_radius, exact_radius_any_n(Q, premise_radius));

  std::vector<int> S;
  auto add = [&](int i) {
    if (std::find(S.begin(), S.end(), i) != S.end()) return false;
    S.push_back(i);
    std::sort(S.begin(), S.end());
    return true;
  };
  auto argmax = [&](const Eigen::VectorXd& u) {
    int best = 0;
    double val = Q.points[0].dot(u);
    for (int i = 1; i < n; ++i) {
      const double v = Q.points[i].dot(u);
      if (v > val + 1e-15) {
        val = v;
        best = i;
      }
    }
    return best;
  };

  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(d);
  e1(0) = 1.0;
  add(argmax(e1));
  add(argmax(-e1));

  const int target = std::min(2 * d, n);
  while (static_cast<int>(S.size()) < target) {
    std::vector<Eigen::VectorXd> pts;
    for (int i : S) pts.push_back(Q.points[i]);
    Eigen::VectorXd u;
    if (detail::origin_margin(d, pts) >= tol::interior_margin) {
      const detail::FacetScan fs = detail::facet_scan(d, pts);
      if (!fs.found) break;
      u = fs.critical_normal;
    } else {
      u = detail::min_support_direction(d, pts).second;
    }
    if (!add(argmax(u))) break;  // support already matched: converged
  }

  std::vector<Eigen::VectorXd> pts;
  for (int i : S) pts.push_back(Q.points[i]);

  SteinitzCertificate cert;
  cert.indices = S;
  cert.achieved_radius = subset_radius(d, pts);
  cert.method = SelectMethod::greedy;
  cert.cardinality_bound = 2 * d;
  cert.premise_radius = premise_radius;
  return cert;
}

QhtResult qht_select(const EuclideanPointSet& L) {
  L.validate();
  // premise: polar(L) inside the unit ball, i.e. conv(L) contains B(o,1)
  if (L.size() <= guards().enum_max_points && L.dim <= guards().enum_max_dim) {
    const auto pmn = polar_max_norm(L);
    if (!pmn) throw PremiseViolated("polar(L) is unbounded");
    if (*pmn > 1.0 + tol::premise)
      throw PremiseViolated("polar(L) exceeds the unit ball: max norm " + std::to_string(*pmn));
  } else {
    const double r = detail::adaptive_containment_radius(L, 1.0);
    if (r < 1.0 - tol::premise)
      throw PremiseViolated("conv(L) does not contain the unit ball");
  }

  const SteinitzCertificate inner = (L.size() <= guards().exact_max_points)
                                        ? select_exact(L)
                                        : select_greedy(L);
  if (inner.achieved_radius <= 0.0)
    throw std::runtime_error("selection produced zero radius under a valid premise");

  QhtResult out;
  out.indices = inner.indices;
  out.guaranteed_polar_radius = 1.0 / inner.achieved_radius;
  out.inner = inner;

  const auto check = polar_max_norm(L.subset(inner.indices));
  if (!check || *check > out.guaranteed_polar_radius + tol::premise)
    throw std::runtime_error("polar re-verification failed");
  return out;
}

}  // namespace qs
