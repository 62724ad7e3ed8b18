#ifndef QS_IO_HPP
#define QS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qs/pipeline.hpp"
#include "qs/sphere.hpp"
#include "qs/steinitz.hpp"

namespace qs::io {

inline constexpr int kSchemaVersion = 1;

// On-disk instance: kind "euclidean" or "spherical"; dim counts coordinates
// per point (ambient dimension).
struct InstanceFile {
  std::string kind;
  int dim = 0;
  std::vector<Eigen::VectorXd> points;
  std::optional<Cap> cap;                   // spherical only
  std::optional<double> premise_radius;     // euclidean only, normally 1
  std::string generator;
  std::uint64_t seed = 0;
  bool axis_aligned = false;  // true when the cap axis was rotated to the pole on load

  EuclideanPointSet euclid() const;      // throws SchemaError on kind mismatch
  SphericalPointSet spherical() const;
};

struct Verification {
  std::string status;  // "verified" | "failed"
  long long oracle_samples = 0;
  double margin = 0.0;
};

struct CertificateFile {
  std::string instance_digest;  // sha256 of the instance file bytes
  std::string kind;             // "steinitz" | "spherical"
  std::optional<SteinitzCertificate> steinitz;
  std::optional<SphericalCertificate> spherical;
  Verification verification;
};

// Canonical serialization: fixed key order, 17-significant-digit floats,
// "-0" normalized; serialize -> parse is the identity.
std::string to_json(const InstanceFile& f);
std::string to_json(const CertificateFile& f);

// Throw SchemaError on malformed input.
InstanceFile parse_instance(const std::string& text);
CertificateFile parse_certificate(const std::string& text);

std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);   // SchemaError on I/O failure
void write_file(const std::string& path, const std::string& content);

// Load + validate + normalize: spherical points renormalized (rejected when
// off by more than 1e-9); caps about non-polar axes rotated to the pole.
InstanceFile load_instance(const std::string& path);

// n points at radii in [1.05, 3]; cross-polytope augmentation keeps the unit
// ball covered; deterministic per seed.
InstanceFile gen_euclid(int dim, int n, std::uint64_t seed);

// Ring of 2*dim points placed so the cap premise holds with margin, plus
// random points, southern_fraction of them below the equator.
InstanceFile gen_sphere(int dim, int n, double rho, std::uint64_t seed,
                        double southern_fraction);

}  // namespace qs::io

#endif
