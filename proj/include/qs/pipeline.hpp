#ifndef QS_PIPELINE_HPP
#define QS_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qs/sphere.hpp"
#include "qs/steinitz.hpp"

namespace qs {

enum class CaseTag { full_sphere, northern, general };

std::string to_string(CaseTag t);

struct SphericalCertificate {
  std::vector<int> indices;  // ascending, into the input C
  CaseTag case_tag = CaseTag::northern;
  double achieved_cap = 0.0;   // largest cap about the pole verified in sconv(selection)
  double certified_cap = 0.0;  // analytic lower bound from the case formula
  std::optional<double> internal_radius;  // Euclidean radius used by the bound
  bool polarity_center_shifted = false;
};

// Scalar record for the small-angle inequality checks.
struct LemmaScalars {
  double t = 0.0;    // > 0
  double rho = 0.0;  // in (0, pi/2)
  double r = 0.0;    // in (0, 1]
  void validate() const;
};

// pi/2 - arctan(cot(rho)/r); lower-bounds the retained cap in the general
// case and satisfies >= r*rho/2. PremiseViolated outside the domain.
double certified_cap_radius(double rho, double r);

// Lemma predicate: t <= tan t on (0, pi/2), and tan t <= 2t on (0, pi/4).
bool tan_bounds_hold(double t);

// Select at most 2d points of C (d+2 in the full-sphere case) whose
// spherical hull retains a quantified cap about the north pole.
SphericalCertificate select_spherical(const SphericalPointSet& C, double rho);

// achieved_cap/rho minus the Euclidean achieved radius of the projected
// instance; small at small rho (the gamma <= r limit).
double gamma_consistency_probe(const SphericalPointSet& C, double rho_small);

}  // namespace qs

#endif
