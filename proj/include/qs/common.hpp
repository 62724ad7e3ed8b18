#ifndef QS_COMMON_HPP
#define QS_COMMON_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qs {

// Premise of an operation does not hold (origin not interior, cap not
// contained, parameter outside the guaranteed domain, ...).
class PremiseViolated : public std::runtime_error {
public:
  explicit PremiseViolated(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds the enumeration guards; subset/vertex enumeration is
// combinatorial and the workbench targets desk scale.
class ScaleLimit : public std::runtime_error {
public:
  explicit ScaleLimit(const std::string& what) : std::runtime_error(what) {}
};

// Central projection is undefined on the equator hyperplane.
class EquatorSingularity : public std::runtime_error {
public:
  explicit EquatorSingularity(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance/certificate file.
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Witness margin for strict/open conditions (interiority, strict cones).
inline constexpr double interior_margin = 1e-9;
// Residual tolerance for convex/conic membership solves.
inline constexpr double membership = 1e-9;
// Absolute slack on premise radius/cap comparisons.
inline constexpr double premise = 1e-9;
// Unit-vector normalization tolerance after ingestion.
inline constexpr double unit_norm = 1e-12;
// d-subsets with condition number above this cannot define a facet/vertex.
inline constexpr double max_condition = 1e12;
}  // namespace tol

// Enumeration guards. Defaults can be raised via environment variables
// QSW_ENUM_MAX_POINTS / QSW_ENUM_MAX_DIM (see README).
struct Guards {
  int enum_max_points = 40;   // facet/vertex/extreme-ray enumeration
  int enum_max_dim = 6;       // Euclidean dimension d (sphere dimension for caps)
  int exact_max_points = 20;  // exhaustive subset search
  int greedy_max_points = 10000;
  int oracle_max_points = 12; // exhaustive_best_subset
};

inline const Guards& guards() {
  static const Guards g = [] {
    Guards g;
    if (const char* s = std::getenv("QSW_ENUM_MAX_POINTS")) g.enum_max_points = std::atoi(s);
    if (const char* s = std::getenv("QSW_ENUM_MAX_DIM")) g.enum_max_dim = std::atoi(s);
    return g;
  }();
  return g;
}

inline void check_enum_guard(int n, int dim, const char* where) {
  const Guards& g = guards();
  if (n > g.enum_max_points || dim > g.enum_max_dim)
    throw ScaleLimit(std::string(where) + ": instance exceeds enumeration guard (n <= " +
                     std::to_string(g.enum_max_points) + ", d <= " +
                     std::to_string(g.enum_max_dim) + "), got n = " + std::to_string(n) +
                     ", d = " + std::to_string(dim));
}

}  // namespace qs

#endif
