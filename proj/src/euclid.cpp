#include "qs/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

// argmax of <q_i, u>, smallest index on ties
std::pair<int, double> support_argmax(const std::vector<Eigen::VectorXd>& pts,
                                      const Eigen::VectorXd& u) {
  int best = 0;
  double val = pts[0].dot(u);
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    const double v = pts[i].dot(u);
    if (v > val + 1e-15) {
      val = v;
      best = i;
    }
  }
  return {best, val};
}

}  // namespace

Eigen::MatrixXd EuclideanPointSet::matrix() const {
  Eigen::MatrixXd M(dim, size());
  for (int i = 0; i < size(); ++i) M.col(i) = points[i];
  return M;
}

EuclideanPointSet EuclideanPointSet::subset(const std::vector<int>& indices) const {
  EuclideanPointSet out;
  out.dim = dim;
  for (int i : indices) {
    out.points.push_back(points.at(i));
    if (!labels.empty()) out.labels.push_back(labels.at(i));
  }
  return out;
}

void EuclideanPointSet::validate() const {
  if (dim < 1) throw std::invalid_argument("point set dimension must be >= 1");
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("point/dimension mismatch");
  if (!labels.empty() && labels.size() != points.size())
    throw std::invalid_argument("label/point count mismatch");
}

EuclideanPointSet make_point_set(int dim, std::vector<Eigen::VectorXd> points,
                                 std::vector<std::string> labels) {
  EuclideanPointSet Q{dim, std::move(points), std::move(labels)};
  Q.validate();
  return Q;
}

namespace detail {

double origin_margin(int dim, const std::vector<Eigen::VectorXd>& points) {
  const int n = static_cast<int>(points.size());
  // per axis direction: max eps with eps*s*e_j = sum lambda_i q_i, lambda in simplex
  double worst = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd A(dim + 1, n + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim + 1);
  b(dim) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(n) = -1.0;
  for (int j = 0; j < dim; ++j) {
    for (int s = 0; s < 2; ++s) {
      A.setZero();
      for (int i = 0; i < n; ++i) {
        A.block(0, i, dim, 1) = points[i];
        A(dim, i) = 1.0;
      }
      A(j, n) = (s == 0) ? -1.0 : 1.0;
      const auto res = lp::solve(A, b, c);
      if (res.status != lp::Status::optimal)
        return -std::numeric_limits<double>::infinity();
      worst = std::min(worst, -res.objective);
    }
  }
  return worst / std::sqrt(static_cast<double>(dim));
}

std::optional<Eigen::VectorXd> hull_membership(const Eigen::MatrixXd& M,
                                               const Eigen::VectorXd& target, double tol) {
  if (M.cols() == 0) return std::nullopt;
  Eigen::VectorXd lam = lp::l1_fit_nonneg(M, target, /*affine=*/true);
  const double res = (M * lam - target).lpNorm<1>();
  const double mass = std::abs(lam.sum() - 1.0);
  if (res > tol || mass > 1e-7) return std::nullopt;
  for (int i = 0; i < lam.size(); ++i) lam(i) = std::max(lam(i), 0.0);
  return lam;
}

FacetScan facet_scan(int dim, const std::vector<Eigen::VectorXd>& points) {
  FacetScan out;
  const int n = static_cast<int>(points.size());
  if (n < dim) return out;

  auto supporting = [&](const Eigen::VectorXd& nrm, double off) {
    for (const auto& p : points)
      if (nrm.dot(p) > off + tol::premise) return false;
    return true;
  };

  std::vector<std::pair<double, Eigen::VectorXd>> cands;
  std::vector<int> comb(dim);
  std::iota(comb.begin(), comb.end(), 0);
  Eigen::MatrixXd A(dim, dim + 1);
  do {
    for (int r = 0; r < dim; ++r) {
      A.block(r, 0, 1, dim) = points[comb[r]].transpose();
      A(r, dim) = -1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(dim - 1) <= 0.0 || sv(0) > sv(dim - 1) * tol::max_condition)
      continue;  // affinely dependent or too ill-conditioned to trust
    Eigen::VectorXd nb = svd.matrixV().col(dim);
    Eigen::VectorXd nrm = nb.head(dim);
    double off = nb(dim);
    const double s = nrm.norm();
    if (s < 1e-12) continue;
    nrm /= s;
    off /= s;
    if (off < 0.0) {
      nrm = -nrm;
      off = -off;
    }
    if (supporting(nrm, off))
      cands.emplace_back(off, nrm);
    else if (off <= 1e-12 && supporting(-nrm, off))
      cands.emplace_back(off, -nrm);
  } while (next_combination(comb, n));

  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::lexicographical_compare(a.second.data(), a.second.data() + a.second.size(),
                                        b.second.data(), b.second.data() + b.second.size());
  });
  // same facet reached through different subsets
  for (const auto& c : cands) {
    if (!out.facets.empty() && std::abs(out.facets.back().first - c.first) <= 1e-9 &&
        (out.facets.back().second - c.second).norm() <= 1e-7)
      continue;
    out.facets.push_back(c);
  }
  if (!out.facets.empty()) {
    out.found = true;
    out.radius = out.facets.front().first;
    out.critical_normal = out.facets.front().second;
  }
  return out;
}

std::pair<double, Eigen::VectorXd> min_support_direction(
    int dim, const std::vector<Eigen::VectorXd>& points) {
  const int n = static_cast<int>(points.size());
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_u;
  // minimize max_i <q_i,u> over each face {u_j = s, |u_k| <= 1} of the cube
  for (int j = 0; j < dim; ++j) {
    for (int sgn : {+1, -1}) {
      const int nw = dim - 1;                  // omega_k = u_k + 1 in [0,2]
      const int nv = nw + 2 + nw + n;          // omega, z+, z-, box slacks, row slacks
      const int nr = n + nw;
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nr, nv);
      Eigen::VectorXd b(nr);
      Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
      c(nw) = 1.0;
      c(nw + 1) = -1.0;
      for (int i = 0; i < n; ++i) {
        int col = 0;
        double rhs = 0.0;
        for (int k = 0; k < dim; ++k) {
          if (k == j) continue;
          A(i, col) = points[i](k);
          rhs += points[i](k);
          ++col;
        }
        rhs -= sgn * points[i](j);
        A(i, nw) = -1.0;
        A(i, nw + 1) = 1.0;
        A(i, nw + 2 + nw + i) = 1.0;
        b(i) = rhs;
      }
      for (int k = 0; k < nw; ++k) {
        A(n + k, k) = 1.0;
        A(n + k, nw + 2 + k) = 1.0;
        b(n + k) = 2.0;
      }
      const auto res = lp::solve(A, b, c);
      if (res.status != lp::Status::optimal) continue;
      Eigen::VectorXd u(dim);
      int col = 0;
      for (int k = 0; k < dim; ++k) {
        if (k == j) {
          u(k) = sgn;
          continue;
        }
        u(k) = res.x(col) - 1.0;
        ++col;
      }
      const double nu = u.norm();
      const double val = res.objective / nu;
      if (val < best - 1e-15) {
        best = val;
        best_u = u / nu;
      }
    }
  }
  if (!best_u.size()) throw std::runtime_error("support minimization failed");
  return {best, best_u};
}

namespace {

// Largest active-set size whose facet scan stays within a fixed work budget
// of d-subset enumerations; never stricter than the enumeration guard.
int active_set_cap(int dim) {
  constexpr double kBudget = 2e5;
  int m = dim;
  double scans = 1.0;  // C(m, dim)
  while (scans * (m + 1) / (m + 1 - dim) <= kBudget) {
    ++m;
    scans = scans * m / (m - dim);
  }
  return std::max(m, guards().enum_max_points);
}

}  // namespace

double adaptive_containment_radius(const EuclideanPointSet& Q, double stop_at) {
  Q.validate();
  if (!contains_origin_interior(Q))
    throw PremiseViolated("origin is not interior to conv(Q)");
  const int n = Q.size();
  const int cap = active_set_cap(Q.dim);
  std::vector<int> S;
  auto add = [&](int i) {
    if (std::find(S.begin(), S.end(), i) == S.end()) {
      S.push_back(i);
      std::sort(S.begin(), S.end());
      return true;
    }
    return false;
  };
  for (int j = 0; j < Q.dim; ++j) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(Q.dim);
    for (int sgn : {+1, -1}) {
      u(j) = sgn;
      add(support_argmax(Q.points, u).first);
    }
  }
  for (;;) {
    if (static_cast<int>(S.size()) > cap)
      throw ScaleLimit("active set for exact radius exceeded enumeration budget");
    std::vector<Eigen::VectorXd> pts;
    for (int i : S) pts.push_back(Q.points[i]);
    if (origin_margin(Q.dim, pts) >= tol::interior_margin) {
      const FacetScan fs = facet_scan(Q.dim, pts);
      if (!fs.found) throw std::runtime_error("facet scan found no supporting facet");
      if (fs.radius >= stop_at) return fs.radius;  // lower bound already suffices
      const auto [idx, val] = support_argmax(Q.points, fs.critical_normal);
      if (val <= fs.radius + 1e-12) return fs.radius;  // h_Q = h_S at the critical facet
      add(idx);
    } else {
      const auto [h, u] = min_support_direction(Q.dim, pts);
      const auto [idx, val] = support_argmax(Q.points, u);
      (void)h;
      if (!add(idx)) throw std::runtime_error("active set stalled before enclosing origin");
    }
    if (static_cast<int>(S.size()) > n)
      throw std::runtime_error("active set exceeded input size");
  }
}

}  // namespace detail

bool contains_origin_interior(const EuclideanPointSet& Q) {
  Q.validate();
  return detail::origin_margin(Q.dim, Q.points) >= tol::interior_margin;
}

double containment_radius(const EuclideanPointSet& Q) {
  Q.validate();
  check_enum_guard(Q.size(), Q.dim, "containment_radius");
  if (!contains_origin_interior(Q))
    throw PremiseViolated("origin is not interior to conv(Q)");
  const detail::FacetScan fs = detail::facet_scan(Q.dim, Q.points);
  if (!fs.found) throw std::runtime_error("facet scan found no supporting facet");
  return fs.radius;
}

std::vector<Halfspace> polar_points(const EuclideanPointSet& S) {
  if (!S.points.empty()) S.validate();  // empty set: polar is all of R^d
  std::vector<Halfspace> out;
  out.reserve(S.size());
  for (const auto& p : S.points) out.push_back(Halfspace{p, 1.0});
  return out;
}

std::optional<double> polar_max_norm(const EuclideanPointSet& L) {
  L.validate();
  check_enum_guard(L.size(), L.dim, "polar_max_norm");
  if (!contains_origin_interior(L)) return std::nullopt;  // polar is unbounded
  const int n = L.size();
  const int d = L.dim;
  double best = 0.0;
  bool any = false;
  std::vector<int> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  Eigen::MatrixXd M(d, d);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(d);
  do {
    for (int r = 0; r < d; ++r) M.row(r) = L.points[comb[r]].transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(d - 1) <= 0.0 || sv(0) > sv(d - 1) * tol::max_condition) continue;
    const Eigen::VectorXd x = svd.solve(ones);
    bool feasible = true;
    for (const auto& l : L.points)
      if (l.dot(x) > 1.0 + tol::premise) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    any = true;
    best = std::max(best, x.norm());
  } while (next_combination(comb, n));
  if (!any) throw std::runtime_error("polar vertex enumeration found no vertex");
  return best;
}

std::vector<int> caratheodory_select(const EuclideanPointSet& Q) {
  Q.validate();
  const int n = Q.size();
  const int d = Q.dim;
  const Eigen::MatrixXd M = Q.matrix();
  const Eigen::VectorXd target = Eigen::VectorXd::Zero(d);

  auto lam0 = detail::hull_membership(M, target, tol::membership);
  if (!lam0) throw PremiseViolated("origin is not in conv(Q)");

  // second stage: among exact representations, prefer low indices
  Eigen::VectorXd lam = *lam0;
  {
    const double res1 = (M * lam - target).lpNorm<1>();
    const int nv = n + d + d + 1;  // lambda, s+, s-, residual slack
    const int nr = d + 2;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nr, nv);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(nr);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
    A.block(0, 0, d, n) = M;
    A.block(0, n, d, d) = Eigen::MatrixXd::Identity(d, d);
    A.block(0, n + d, d, d) = -Eigen::MatrixXd::Identity(d, d);
    for (int i = 0; i < n; ++i) {
      A(d, i) = 1.0;
      c(i) = static_cast<double>(i + 1);
    }
    b(d) = 1.0;
    for (int k = 0; k < 2 * d; ++k) A(d + 1, n + k) = 1.0;
    A(d + 1, nv - 1) = 1.0;
    b(d + 1) = res1 + 1e-12;
    const auto res = lp::solve(A, b, c);
    if (res.status == lp::Status::optimal) lam = res.x.head(n);
  }

  std::vector<int> S;
  std::vector<double> w;
  for (int i = 0; i < n; ++i)
    if (lam(i) > 1e-12) {
      S.push_back(i);
      w.push_back(lam(i));
    }

  // peel affine dependencies until the support is a simplex
  for (;;) {
    const int k = static_cast<int>(S.size());
    if (k <= 1) break;
    Eigen::MatrixXd W(d + 1, k);
    for (int i = 0; i < k; ++i) {
      W.block(0, i, d, 1) = Q.points[S[i]];
      W(d, i) = 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(W, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const int nsv = static_cast<int>(sv.size());
    if (k <= nsv && sv(k - 1) > sv(0) * 1e-12) break;  // affinely independent
    Eigen::VectorXd mu = svd.matrixV().col(k - 1);
    if (mu.maxCoeff() <= 0.0) mu = -mu;
    double t = std::numeric_limits<double>::infinity();
    int drop = -1;
    for (int i = 0; i < k; ++i) {
      if (mu(i) <= 1e-14) continue;
      const double r = w[i] / mu(i);
      if (r < t - 1e-15 || (r <= t + 1e-15 && (drop < 0 || S[i] > S[drop]))) {
        t = r;
        drop = i;
      }
    }
    if (drop < 0) break;
    std::vector<int> S2;
    std::vector<double> w2;
    for (int i = 0; i < k; ++i) {
      if (i == drop) continue;
      const double wi = std::max(w[i] - t * mu(i), 0.0);
      if (wi > 1e-12) {
        S2.push_back(S[i]);
        w2.push_back(wi);
      }
    }
    if (S2.empty()) break;
    S = std::move(S2);
    w = std::move(w2);
  }

  // drop removable points, highest index first => inclusion-minimal
  for (int pos = static_cast<int>(S.size()) - 1; pos >= 0; --pos) {
    if (S.size() <= 1) break;
    std::vector<int> T;
    for (int i = 0; i < static_cast<int>(S.size()); ++i)
      if (i != pos) T.push_back(S[i]);
    Eigen::MatrixXd MT(d, T.size());
    for (int i = 0; i < static_cast<int>(T.size()); ++i) MT.col(i) = Q.points[T[i]];
    if (detail::hull_membership(MT, target, tol::membership)) S = std::move(T);
  }

  Eigen::MatrixXd MS(d, S.size());
  for (int i = 0; i < static_cast<int>(S.size()); ++i) MS.col(i) = Q.points[S[i]];
  if (!detail::hull_membership(MS, target, tol::membership))
    throw std::runtime_error("caratheodory reverification failed");
  return S;
}

}  // namespace qs
