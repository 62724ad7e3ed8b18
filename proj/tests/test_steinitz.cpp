#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qs/steinitz.hpp"

using namespace qs;

TEST_CASE("r_bound bracket") {
  const RBound b2 = r_bound(2);
  CHECK(b2.lower == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
  CHECK(b2.upper == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
  for (int d = 2; d <= 6; ++d) {
    const RBound b = r_bound(d);
    CHECK(b.lower > 0.0);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= 1.0);
  }
}

TEST_CASE("select_exact on the cross-polytope keeps all four points") {
  const auto Q = th::cross_polytope(2);
  const auto cert = select_exact(Q, 1.0 / std::sqrt(2.0));
  CHECK(cert.indices == std::vector<int>{0, 1, 2, 3});
  CHECK(cert.achieved_radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cert.method == SelectMethod::exact);
  CHECK(cert.cardinality_bound == 4);
}

TEST_CASE("select_exact drops the redundant point") {
  const auto Q = th::pts(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}});
  const auto cert = select_exact(Q);
  CHECK(cert.indices == std::vector<int>{0, 1, 2, 3});
  CHECK(cert.achieved_radius == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("select_exact premise and guards") {
  CHECK_THROWS_AS((void)select_exact(th::pts(2, {{1, 0}, {0, 1}, {1, 1}})), PremiseViolated);
  RandomSource rng(21, 0);
  std::vector<Eigen::VectorXd> p;
  for (int i = 0; i < 21; ++i) p.push_back(rng.unit_vector(2) * 2.0);
  CHECK_THROWS_AS((void)select_exact(make_point_set(2, p)), ScaleLimit);
}

TEST_CASE("select_greedy on the square keeps all corners") {
  const auto cert = select_greedy(th::pts(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  CHECK(cert.indices.size() == 4);
  CHECK(cert.achieved_radius == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cert.method == SelectMethod::greedy);
}

TEST_CASE("select_greedy on a dense circle") {
  std::vector<Eigen::VectorXd> p;
  for (int i = 0; i < 64; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 64.0;
    p.push_back(th::vec({2.0 * std::cos(a), 2.0 * std::sin(a)}));
  }
  const auto cert = select_greedy(make_point_set(2, p));
  CHECK(cert.indices.size() <= 4);
  CHECK(cert.achieved_radius >= 1.0);
}

TEST_CASE("select_greedy rejects a too-small hull") {
  const auto Q = th::pts(2, {{0.5, 0.5}, {0.5, -0.5}, {-0.5, 0.5}, {-0.5, -0.5}});
  CHECK_THROWS_AS((void)select_greedy(Q), PremiseViolated);  // radius 0.5 < 1
  CHECK_NOTHROW((void)select_greedy(Q, 0.5));
}

TEST_CASE("exact dominates greedy and meets the radius lower bound") {
  RandomSource rng(22, 0);
  for (int trial = 0; trial < 15; ++trial) {
    const int d = 2 + (trial % 2);
    const auto Q = th::random_covering(d, 6, 1.1 * std::sqrt(double(d)), rng);
    const auto ex = select_exact(Q);
    const auto gr = select_greedy(Q);
    CHECK(static_cast<int>(ex.indices.size()) <= 2 * d);
    CHECK(static_cast<int>(gr.indices.size()) <= 2 * d);
    CHECK(ex.achieved_radius >= gr.achieved_radius - 1e-12);
    CHECK(ex.achieved_radius >= r_bound(d).lower);
    CHECK(std::abs(containment_radius(Q.subset(ex.indices)) - ex.achieved_radius) <= 1e-9);
  }
}

TEST_CASE("selection is deterministic") {
  RandomSource rng(23, 0);
  const auto Q = th::random_covering(2, 8, 1.6, rng);
  const auto a = select_exact(Q);
  const auto b = select_exact(Q);
  CHECK(a.indices == b.indices);
  CHECK(a.achieved_radius == b.achieved_radius);
  const auto g1 = select_greedy(Q);
  const auto g2 = select_greedy(Q);
  CHECK(g1.indices == g2.indices);
  CHECK(g1.achieved_radius == g2.achieved_radius);
}

TEST_CASE("qht on the scaled cross-polytope") {
  const auto res = qht_select(th::cross_polytope(2, 2.0));
  CHECK(res.indices == std::vector<int>{0, 1, 2, 3});
  CHECK(res.guaranteed_polar_radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  const auto pm = polar_max_norm(th::cross_polytope(2, 2.0).subset(res.indices));
  REQUIRE(pm.has_value());
  CHECK(*pm <= res.guaranteed_polar_radius + 1e-9);
}

TEST_CASE("qht premise requires the polar inside the unit ball") {
  CHECK_THROWS_AS((void)qht_select(th::pts(2, {{1, 0}, {0, 1}})), PremiseViolated);
}

TEST_CASE("qht re-verifies on random instances") {
  RandomSource rng(24, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto L = th::random_covering(2, 6, 1.5, rng);
    const auto res = qht_select(L);
    CHECK(res.indices.size() <= 4);
    CHECK(std::abs(res.guaranteed_polar_radius * res.inner.achieved_radius - 1.0) <= 1e-12);
    const auto pm = polar_max_norm(L.subset(res.indices));
    REQUIRE(pm.has_value());
    CHECK(*pm <= res.guaranteed_polar_radius + 1e-9);
  }
}
