#include "qs/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qs {

namespace {

constexpr int kScorerDraws = 10000;

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

void check_oracle_guard(int n, const char* where) {
  if (n > guards().oracle_max_points)
    throw ScaleLimit(std::string(where) + " supports at most " +
                     std::to_string(guards().oracle_max_points) + " points");
}

}  // namespace

namespace detail {

double nnls_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, int max_iter) {
  const int n = static_cast<int>(A.cols());
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(n);
  std::vector<char> passive(n, 0);
  Eigen::VectorXd resid = y;

  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    double best = 1e-10;
    const Eigen::VectorXd w = A.transpose() * resid;
    for (int i = 0; i < n; ++i)
      if (!passive[i] && w(i) > best) {
        best = w(i);
        enter = i;
      }
    if (enter < 0) break;
    passive[enter] = 1;

    for (;;) {
      std::vector<int> P;
      for (int i = 0; i < n; ++i)
        if (passive[i]) P.push_back(i);
      Eigen::MatrixXd Ap(A.rows(), P.size());
      for (int i = 0; i < static_cast<int>(P.size()); ++i) Ap.col(i) = A.col(P[i]);
      const Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(y);
      if (z.minCoeff() > 0.0) {
        lam.setZero();
        for (int i = 0; i < static_cast<int>(P.size()); ++i) lam(P[i]) = z(i);
        break;
      }
      double alpha = 1.0;
      for (int i = 0; i < static_cast<int>(P.size()); ++i)
        if (z(i) <= 0.0) {
          const double li = lam(P[i]);
          if (li - z(i) > 1e-15) alpha = std::min(alpha, li / (li - z(i)));
        }
      for (int i = 0; i < static_cast<int>(P.size()); ++i) {
        lam(P[i]) += alpha * (z(i) - lam(P[i]));
        if (lam(P[i]) <= 1e-12) {
          lam(P[i]) = 0.0;
          passive[P[i]] = 0;
        }
      }
      if (std::none_of(passive.begin(), passive.end(), [](char c) { return c != 0; })) break;
    }
    resid = y - A * lam;
  }
  return resid.norm();
}

}  // namespace detail

double mc_containment_radius(const EuclideanPointSet& Q, int n_dirs, RandomSource& rng) {
  Q.validate();
  if (n_dirs < 1) throw std::invalid_argument("n_dirs must be >= 1");
  const Eigen::MatrixXd P = Q.matrix();  // d x n
  const int d = Q.dim;

  // stage 1: global scan; every evaluated direction is a unit vector, so the
  // running minimum never drops below the true radius
  const bool refine = n_dirs >= 4096;
  const int global = refine ? n_dirs / 2 : n_dirs;
  Eigen::MatrixXd U(global, d);
  for (int i = 0; i < global; ++i) U.row(i) = rng.unit_vector(d).transpose();
  const Eigen::VectorXd vals = (U * P).rowwise().maxCoeff();
  double out = vals.minCoeff();
  if (!refine) return out;

  // stage 2: zoom on well-separated low-value basins; support minima of a
  // polytope are conical, so the global stage alone resolves them poorly
  double maxnorm = 0.0;
  for (int j = 0; j < P.cols(); ++j) maxnorm = std::max(maxnorm, P.col(j).norm());
  std::vector<int> order(global);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vals(a) < vals(b); });

  constexpr int kBasins = 32;
  constexpr double kSeparation = 0.2;  // radians; zoom start scale must exceed it
  const double cutoff = vals(order[0]) + 0.1 * maxnorm;
  std::vector<Eigen::VectorXd> reps;
  for (int i : order) {
    if (vals(i) > cutoff || static_cast<int>(reps.size()) >= kBasins) break;
    const Eigen::VectorXd u = U.row(i).transpose();
    const bool separated = std::none_of(reps.begin(), reps.end(), [&](const Eigen::VectorXd& r) {
      return r.dot(u) > std::cos(kSeparation);
    });
    if (separated) reps.push_back(u);
  }

  constexpr int kRounds = 8;
  const int per_round =
      std::max(32, (n_dirs - global) / (static_cast<int>(reps.size()) * kRounds));
  for (Eigen::VectorXd u0 : reps) {
    double v0 = (u0.transpose() * P).maxCoeff();
    double sigma = 0.3;
    for (int round = 0; round < kRounds; ++round) {
      for (int s = 0; s < per_round; ++s) {
        Eigen::VectorXd g(d);
        for (int k = 0; k < d; ++k) g(k) = rng.normal();
        const Eigen::VectorXd u = (u0 + sigma * g).normalized();
        const double h = (u.transpose() * P).maxCoeff();
        if (h < v0) {
          v0 = h;
          u0 = u;
        }
      }
      sigma *= 0.2;
    }
    out = std::min(out, v0);
  }
  return out;
}

bool mc_cap_contained(const SphericalPointSet& C, const Cap& cap, int n_samples,
                      RandomSource& rng, double margin) {
  C.validate();
  cap.validate();
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (cap.axis.size() != C.ambient_dim) throw std::invalid_argument("axis/dimension mismatch");
  if (spolar_empty(C)) return true;  // hull is the whole sphere
  Eigen::MatrixXd M(C.ambient_dim, C.size());
  for (int i = 0; i < C.size(); ++i) M.col(i) = C.points[i];
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::VectorXd x = rng.cap_point(cap.axis, cap.rho);
    if (detail::nnls_residual(M, x) > margin) return false;
  }
  return true;
}

BestSubset exhaustive_best_subset(const EuclideanPointSet& Q, int k, RandomSource& rng) {
  Q.validate();
  check_oracle_guard(Q.size(), "exhaustive_best_subset");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  BestSubset best;
  if (k == 0) return best;

  const int n = Q.size();
  const int d = Q.dim;
  // one shared direction set keeps subset scores comparable and deterministic;
  // in the plane, every critical direction of every subset is a pair normal,
  // so enumerating them makes the sampled minimum exact
  std::vector<Eigen::VectorXd> exact_dirs;
  if (d == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Eigen::VectorXd e = Q.points[j] - Q.points[i];
        const double len = e.norm();
        if (len < 1e-14) continue;
        Eigen::VectorXd u(2);
        u << -e(1) / len, e(0) / len;
        exact_dirs.push_back(u);
        exact_dirs.push_back(-u);
      }
  }
  const int rows = kScorerDraws + static_cast<int>(exact_dirs.size());
  Eigen::MatrixXd U(rows, d);
  for (int i = 0; i < kScorerDraws; ++i) U.row(i) = rng.unit_vector(d).transpose();
  for (int i = 0; i < static_cast<int>(exact_dirs.size()); ++i)
    U.row(kScorerDraws + i) = exact_dirs[i].transpose();
  const Eigen::MatrixXd S = U * Q.matrix();  // rows x n

  best.score = 0.0;
  for (int size = 1; size <= std::min(k, n); ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      double score = std::numeric_limits<double>::infinity();
      for (int row = 0; row < rows; ++row) {
        double m = -std::numeric_limits<double>::infinity();
        for (int c : comb) m = std::max(m, S(row, c));
        score = std::min(score, m);
        if (score <= best.score) break;  // cannot win anymore
      }
      score = std::max(score, 0.0);
      if (score > best.score + 1e-15) {
        best.score = score;
        best.indices = comb;
      }
    } while (next_combination(comb, n));
  }
  return best;
}

BestSubset exhaustive_best_subset(const SphericalPointSet& C, const Eigen::VectorXd& axis,
                                  int k, RandomSource& rng) {
  C.validate();
  check_oracle_guard(C.size(), "exhaustive_best_subset");
  if (C.ambient_dim != 3)
    throw ScaleLimit("the cap scorer is implemented for S^2 instances only");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  Eigen::VectorXd a = axis;
  a.normalize();

  BestSubset best;
  if (k == 0) return best;

  // canonical sample parameters shared by every subset: colatitude CDF value
  // and azimuth angle
  std::vector<std::pair<double, double>> draws(kScorerDraws);
  for (auto& dr : draws) dr = {rng.uniform01(), rng.uniform01() * 2.0 * std::numbers::pi};

  // orthonormal frame about the axis
  Eigen::Vector3d b1, b2;
  {
    Eigen::Vector3d a3(a(0), a(1), a(2));
    Eigen::Vector3d h = std::abs(a3(0)) < 0.9 ? Eigen::Vector3d(1, 0, 0) : Eigen::Vector3d(0, 1, 0);
    b1 = a3.cross(h).normalized();
    b2 = a3.cross(b1).normalized();
  }

  const int n = C.size();
  const double half_pi = std::numbers::pi / 2;

  auto subset_score = [&](const std::vector<int>& comb) -> double {
    SphericalPointSet sub = C.subset(comb);
    if (spolar_empty(sub)) return std::numbers::pi;
    Eigen::MatrixXd M(3, static_cast<int>(comb.size()));
    for (int i = 0; i < static_cast<int>(comb.size()); ++i) M.col(i) = sub.points[i];
    if (detail::nnls_residual(M, a) > 1e-6) return 0.0;  // axis itself outside

    auto inside_at = [&](const std::pair<double, double>& dr, double t) {
      // colatitude from the cap-area inverse CDF at radius t, fixed azimuth
      const double c = 1.0 - dr.first * (1.0 - std::cos(t));
      const double theta = std::acos(std::clamp(c, -1.0, 1.0));
      const Eigen::Vector3d w = std::cos(dr.second) * b1 + std::sin(dr.second) * b2;
      Eigen::VectorXd x(3);
      for (int j = 0; j < 3; ++j) x(j) = std::cos(theta) * a(j) + std::sin(theta) * w(j);
      return detail::nnls_residual(M, x) <= 1e-6;
    };

    // membership along a meridian is monotone, so track the running minimum
    // exit radius and bisect only for samples that fall outside it
    double T = half_pi - 1e-9;
    for (const auto& dr : draws) {
      if (T <= 0.0) break;
      if (inside_at(dr, T)) continue;
      double lo = 0.0, hi = T;
      for (int it = 0; it < 18; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (inside_at(dr, mid))
          lo = mid;
        else
          hi = mid;
      }
      T = lo;
    }
    return std::max(T, 0.0);
  };

  best.score = 0.0;
  for (int size = 1; size <= std::min(k, n); ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      const double score = subset_score(comb);
      if (score > best.score + 1e-15) {
        best.score = score;
        best.indices = comb;
      }
    } while (next_combination(comb, n));
  }
  return best;
}

}  // namespace qs
