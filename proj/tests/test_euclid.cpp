#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qs/euclid.hpp"
#include "qs/random.hpp"

using namespace qs;

TEST_CASE("origin interiority") {
  CHECK(contains_origin_interior(th::cross_polytope(2)));
  CHECK_FALSE(contains_origin_interior(th::pts(2, {{1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(contains_origin_interior(th::pts(2, {{1, 0}, {-1, 0}})));
}

TEST_CASE("containment radius of canonical bodies") {
  CHECK(containment_radius(th::cross_polytope(2)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(containment_radius(th::pts(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(containment_radius(th::cross_polytope(3)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS((void)containment_radius(th::pts(2, {{1, 0}, {0, 1}, {1, 1}})),
                  PremiseViolated);
}

TEST_CASE("containment radius honors the enumeration guard") {
  RandomSource rng(3, 0);
  std::vector<Eigen::VectorXd> p;
  for (int i = 0; i < 50; ++i) p.push_back(rng.unit_vector(2) * 2.0);
  CHECK_THROWS_AS((void)containment_radius(make_point_set(2, p)), ScaleLimit);
  // the adaptive path has no point-count guard
  CHECK(detail::adaptive_containment_radius(make_point_set(2, p)) > 1.0);
}

TEST_CASE("polar halfspaces follow the definition") {
  const auto hs = polar_points(th::pts(2, {{2, 0}}));
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].normal == th::vec({2, 0}));
  CHECK(hs[0].offset == 1.0);
  EuclideanPointSet empty;
  empty.dim = 2;
  CHECK(polar_points(empty).empty());
}

TEST_CASE("polar max norm: square and unbounded cases") {
  const auto r = polar_max_norm(th::cross_polytope(2));
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(polar_max_norm(th::pts(2, {{1, 0}, {0, 1}})).has_value());
}

TEST_CASE("polar duality on random interior instances") {
  RandomSource rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto Q = th::random_covering(2, 6, 1.5, rng);
    const double r = containment_radius(Q);
    const auto R = polar_max_norm(Q);
    REQUIRE(R.has_value());
    CHECK(std::abs(*R * r - 1.0) <= 1e-9);
  }
}

TEST_CASE("adaptive radius matches facet enumeration") {
  RandomSource rng(12, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto Q = th::random_covering(3, 8, 2.0, rng);
    CHECK(std::abs(detail::adaptive_containment_radius(Q) - containment_radius(Q)) <= 1e-9);
  }
}

TEST_CASE("radius is monotone under adding points") {
  RandomSource rng(13, 0);
  for (int trial = 0; trial < 10; ++trial) {
    auto Q = th::random_covering(2, 5, 1.5, rng);
    const double r0 = containment_radius(Q);
    Q.points.push_back(rng.unit_vector(2) * 2.5);
    CHECK(containment_radius(Q) >= r0 - 1e-12);
  }
}

TEST_CASE("caratheodory selects few points containing the origin") {
  const auto C = caratheodory_select(th::cross_polytope(3));
  CHECK(C == std::vector<int>{0, 1});  // +-e1 average to the origin

  // regular simplex centered at o: no vertex removable
  const double s = 1.0 / std::sqrt(2.0);
  const auto S = th::pts(2, {{1, 0}, {-0.5, s}, {-0.5, -s}});
  const auto idx = caratheodory_select(S);
  CHECK(idx == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS((void)caratheodory_select(th::pts(2, {{1, 0}, {0, 1}})), PremiseViolated);
}

TEST_CASE("caratheodory output is certified and small") {
  RandomSource rng(14, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto Q = th::random_covering(3, 7, 2.0, rng);
    const auto idx = caratheodory_select(Q);
    CHECK(static_cast<int>(idx.size()) <= Q.dim + 1);
    const auto sub = Q.subset(idx);
    const auto lam = detail::hull_membership(sub.matrix(), Eigen::VectorXd::Zero(Q.dim), 1e-9);
    CHECK(lam.has_value());
  }
}

TEST_CASE("point set validation") {
  CHECK_THROWS_AS((void)th::pts(2, {{1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_point_set(2, {}), std::invalid_argument);
  const auto Q = th::cross_polytope(2);
  const auto sub = Q.subset({0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.points[1] == th::vec({0, 1}));
}
