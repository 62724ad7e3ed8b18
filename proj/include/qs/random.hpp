#ifndef QS_RANDOM_HPP
#define QS_RANDOM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace qs {

// Deterministic, platform-stable randomness: mt19937_64 seeded through
// splitmix64 on (seed, stream); all distributions are derived from raw
// 64-bit draws only, never from std::*_distribution.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();
  double uniform01();  // in [0, 1)
  double uniform(double a, double b);
  double normal();  // standard Gaussian, Box-Muller

  // uniform on the unit sphere of R^dim
  Eigen::VectorXd unit_vector(int dim);
  // uniform w.r.t. surface measure in scap(axis, rho)
  Eigen::VectorXd cap_point(const Eigen::VectorXd& axis, double rho);

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qs

#endif
