#ifndef QS_STEINITZ_HPP
#define QS_STEINITZ_HPP

#include <string>
#include <vector>

#include "qs/euclid.hpp"

namespace qs {

enum class SelectMethod { exact, greedy };

std::string to_string(SelectMethod m);

struct SteinitzCertificate {
  std::vector<int> indices;  // ascending
  double achieved_radius = 0.0;
  SelectMethod method = SelectMethod::exact;
  int cardinality_bound = 0;     // 2d
  double premise_radius = 1.0;   // the ball radius the input was asserted to contain
};

// Known bracket for the optimal constant in dimension dim.
struct RBound {
  int dim = 0;
  double lower = 0.0;  // 1/(6 dim^2)
  double upper = 0.0;  // 1/(2 sqrt(dim))
};

RBound r_bound(int dim);

// Exhaustive search over subsets of size <= 2d maximizing containment_radius;
// ties broken by lexicographically smallest index tuple.
// Throws PremiseViolated when containment_radius(Q) < premise_radius - 1e-9,
// ScaleLimit beyond guards (n <= exact_max_points).
SteinitzCertificate select_exact(const EuclideanPointSet& Q, double premise_radius = 1.0);

// Support-direction greedy: seed with the two points extreme in +-e1, then
// repeatedly add the argmax of <q, u*> where u* is the minimum-support
// direction of the current subset; stop at 2d points (or earlier convergence).
SteinitzCertificate select_greedy(const EuclideanPointSet& Q, double premise_radius = 1.0);

struct QhtResult {
  std::vector<int> indices;
  double guaranteed_polar_radius = 0.0;
  SteinitzCertificate inner;  // the Steinitz certificate behind the bound
};

// Quantitative Helly via polarity: polar(L) in B(o,1) -> at most 2d of the
// constraints keep the polar inside B(o, 1/achieved_radius).
QhtResult qht_select(const EuclideanPointSet& L);

}  // namespace qs

#endif
