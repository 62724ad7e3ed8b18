#include "qs/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  const std::uint64_t mixed =
      splitmix64(splitmix64(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1))));
  gen_.seed(mixed);
}

std::uint64_t RandomSource::next_u64() { return gen_(); }

double RandomSource::uniform01() {
  // 53 mantissa bits -> exact dyadic in [0,1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double RandomSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  has_spare_ = true;
  return mag * std::cos(ang);
}

Eigen::VectorXd RandomSource::unit_vector(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  Eigen::VectorXd v(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) v(i) = normal();
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

Eigen::VectorXd RandomSource::cap_point(const Eigen::VectorXd& axis, double rho) {
  const int D = static_cast<int>(axis.size());
  if (D < 2) throw std::invalid_argument("cap sampling needs ambient dimension >= 2");
  if (rho < 0.0 || rho > std::numbers::pi + 1e-12)
    throw std::invalid_argument("cap radius outside [0, pi]");
  Eigen::VectorXd a = axis;
  a.normalize();
  if (rho >= std::numbers::pi - 1e-12) return unit_vector(D);
  if (rho <= 0.0) return a;

  // colatitude density on S^(D-1) is sin^(D-2)
  double theta;
  if (D == 2) {
    theta = uniform01() * rho;
  } else if (D == 3) {
    theta = std::acos(1.0 - uniform01() * (1.0 - std::cos(rho)));  // exact inverse CDF
  } else {
    const double smax = std::sin(std::min(rho, std::numbers::pi / 2));
    for (;;) {
      const double t = uniform01() * rho;
      const double accept = std::pow(std::sin(t) / smax, D - 2);
      if (uniform01() <= accept) {
        theta = t;
        break;
      }
    }
  }

  // isotropic azimuth: Gaussian projected onto the axis complement
  Eigen::VectorXd w(D);
  for (;;) {
    for (int i = 0; i < D; ++i) w(i) = normal();
    w -= w.dot(a) * a;
    const double n = w.norm();
    if (n > 1e-12) {
      w /= n;
      break;
    }
  }
  return std::cos(theta) * a + std::sin(theta) * w;
}

}  // namespace qs
