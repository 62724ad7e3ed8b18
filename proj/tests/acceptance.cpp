// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qs/euclid.hpp"
#include "qs/io.hpp"
#include "qs/oracles.hpp"
#include "qs/pipeline.hpp"
#include "qs/random.hpp"
#include "qs/steinitz.hpp"

namespace {

using qs::RandomSource;
constexpr double kPi = std::numbers::pi;

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0,
                double e = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d, e);
  return buf;
}

// d random points at radii [1.2, 3] over a cross-polytope anchor: origin interior
qs::EuclideanPointSet random_interior(int d, int n_random, RandomSource& rng) {
  std::vector<Eigen::VectorXd> p;
  for (int j = 0; j < d; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v(j) = sgn * 1.1 * std::sqrt(double(d));
      p.push_back(v);
    }
  }
  for (int i = 0; i < n_random; ++i) p.push_back(rng.unit_vector(d) * rng.uniform(1.2, 3.0));
  return qs::make_point_set(d, std::move(p));
}

qs::SphericalPointSet full_sphere_instance(double theta, double antipode_colat) {
  std::vector<Eigen::VectorXd> p;
  for (int j = 0; j < 2; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
      v(j) = sgn * std::sin(theta);
      v(2) = std::cos(theta);
      p.push_back(v);
    }
  }
  Eigen::VectorXd s(3);
  s << std::sin(antipode_colat), 0.0, std::cos(antipode_colat);
  p.push_back(s);
  return qs::make_spherical(3, std::move(p));
}

void criterion1() {
  Timer t;
  RandomSource rng(1001, 0);
  long violations = 0;
  for (int i = 0; i < 100000; ++i) {
    const double x = rng.uniform(0.0, kPi / 2);
    if (x > std::tan(x) + 1e-12) ++violations;
    if (x > 0.0 && x < kPi / 2 && !qs::tan_bounds_hold(x)) ++violations;
    const double y = rng.uniform(0.0, kPi / 4);
    if (std::tan(y) > 2.0 * y + 1e-12) ++violations;
  }
  const double dt = t.seconds();
  report(1, "tangent inequality sweep", violations == 0 && dt < 1.0,
         fmt("%.0f violations, %.2f s < 1 s", double(violations), dt));
}

void criterion2() {
  Timer t;
  RandomSource rng(1002, 0);
  long violations = 0;
  for (int i = 0; i < 100000; ++i) {
    const double r = 1.0 - rng.uniform01();        // (0, 1]
    double rho = rng.uniform(0.0, kPi / 2);
    if (rho <= 0.0) rho = 1e-9;
    const double lhs = qs::certified_cap_radius(rho, r);
    if (lhs < r * rho / 2.0 - 1e-12) ++violations;
  }
  const double dt = t.seconds();
  report(2, "certified-cap floor", violations == 0 && dt < 1.0,
         fmt("%.0f violations, %.2f s < 1 s", double(violations), dt));
}

void criterion3() {
  Timer t;
  long bad_duality = 0, bad_mc = 0;
  double worst_rel = 0.0, worst_gap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + (trial % 2);
    RandomSource rng(2000 + trial, 0);
    const auto Q = random_interior(d, d == 2 ? 4 + (trial % 5) : 2 + (trial % 5), rng);
    const double exact = qs::containment_radius(Q);
    const auto polar = qs::polar_max_norm(Q);
    if (!polar) {
      ++bad_duality;
      continue;
    }
    const double rel = std::abs(*polar * exact - 1.0);
    worst_rel = std::max(worst_rel, rel);
    if (rel > 1e-9) ++bad_duality;
    RandomSource dirs(3000 + trial, 1);
    const double mc = qs::mc_containment_radius(Q, 100000, dirs);
    const double gap = mc - exact;
    worst_gap = std::max(worst_gap, gap);
    if (gap < -1e-12 || gap > 1e-3) ++bad_mc;
  }
  const double dt = t.seconds();
  report(3, "duality and Monte-Carlo agreement", bad_duality == 0 && bad_mc == 0 && dt < 10.0,
         fmt("max |R*r-1| %.2e, max mc gap %.2e, %.1f s < 10 s", worst_rel, worst_gap, dt));
}

void criterion4() {
  Timer t;
  long bad = 0;
  double min_radius = std::numeric_limits<double>::infinity();
  const qs::RBound rb = qs::r_bound(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = qs::io::gen_euclid(2, 8 + (trial % 3), 4000 + trial);
    const auto Q = inst.euclid();
    const auto cert = qs::select_exact(Q, 1.0);
    min_radius = std::min(min_radius, cert.achieved_radius);
    if (cert.indices.size() > 4 || cert.achieved_radius < rb.lower) ++bad;
  }
  const double dt = t.seconds();
  report(4, "planar selection bracket (d=2)", bad == 0 && dt < 20.0,
         fmt("empirical min radius %.4f vs bracket [%.4f, %.4f], %.1f s < 20 s",
             min_radius, rb.lower, rb.upper, dt));
}

struct CorpusEntry {
  double rho = 0.0;
  qs::SphericalPointSet C;
  qs::SphericalCertificate cert;
};

std::vector<CorpusEntry> g_corpus;

void criterion5() {
  Timer t;
  long bad_card = 0, bad_floor = 0, bad_mc = 0;
  int tags[3] = {0, 0, 0};
  for (int trial = 0; trial < 100; ++trial) {
    const double rho = 0.1 + 0.9 * (trial % 10) / 9.0;
    qs::SphericalPointSet C{0, {}};
    if (trial < 40) {
      C = qs::io::gen_sphere(2, 8, rho, 5000 + trial, 0.0).spherical();
    } else if (trial < 80) {
      C = qs::io::gen_sphere(2, 10, rho, 5000 + trial, 0.3).spherical();
    } else {
      const double theta = std::atan(1.5 * std::sqrt(2.0) * std::tan(rho));
      C = full_sphere_instance(theta, kPi - 0.1 - 0.02 * (trial - 80));
    }
    const auto cert = qs::select_spherical(C, rho);
    ++tags[static_cast<int>(cert.case_tag)];
    if (cert.indices.size() > 4) ++bad_card;
    if (cert.achieved_cap < rho / 48.0 - 1e-12) ++bad_floor;
    qs::Cap cap;
    cap.axis = C.north();
    cap.rho = cert.achieved_cap;
    RandomSource rng(6000 + trial, 2);
    if (!qs::mc_cap_contained(C.subset(cert.indices), cap, 100000, rng, 1e-6)) ++bad_mc;
    g_corpus.push_back({rho, C, cert});
  }
  const double dt = t.seconds();
  const bool mixed = tags[0] > 0 && tags[1] > 0 && tags[2] > 0;
  report(5, "spherical selection sweep (d=2)",
         bad_card == 0 && bad_floor == 0 && bad_mc == 0 && mixed && dt < 60.0,
         fmt("cases full/north/general %.0f/%.0f/%.0f, %.0f oracle failures, %.1f s < 60 s",
             double(tags[0]), double(tags[1]), double(tags[2]), double(bad_mc), dt));
}

void criterion6() {
  long bad = 0;
  long checked = 0;
  for (const auto& e : g_corpus) {
    if (e.cert.case_tag == qs::CaseTag::full_sphere || e.cert.polarity_center_shifted) continue;
    ++checked;
    if (!e.cert.internal_radius) {
      ++bad;
      continue;
    }
    if (e.cert.certified_cap < *e.cert.internal_radius * e.rho / 2.0 - 1e-12) ++bad;
    if (e.cert.achieved_cap < e.cert.certified_cap - 1e-9) ++bad;
  }
  report(6, "certified-cap chain consistency", bad == 0 && checked > 0,
         fmt("%.0f unshifted certificates, %.0f violations", double(checked), double(bad)));
}

void criterion7() {
  Timer t;
  long bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto C = qs::io::gen_sphere(2, 8, 0.01, 7000 + trial, 0.0).spherical();
    const double probe = qs::gamma_consistency_probe(C, 0.01);
    worst = std::max(worst, std::abs(probe));
    if (std::abs(probe) > 0.05) ++bad;
  }
  const double dt = t.seconds();
  report(7, "gamma-to-r northern limit", bad == 0 && dt < 10.0,
         fmt("max |probe| %.2e <= 0.05, %.1f s < 10 s", worst, dt));
}

void criterion8() {
  long bad = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = 0.3 + 0.05 * trial;
    const auto C = full_sphere_instance(theta, kPi - 0.05 - 0.03 * trial);
    if (!qs::spolar_empty(C)) {
      ++bad;
      continue;
    }
    const auto cert = qs::select_spherical(C, 0.2);
    if (cert.case_tag != qs::CaseTag::full_sphere) ++bad;
    if (cert.indices.size() > 4) ++bad;  // d + 2
    if (cert.achieved_cap != kPi) ++bad;
    const auto sub = C.subset(cert.indices);
    Eigen::MatrixXd M(3, sub.size());
    for (int i = 0; i < sub.size(); ++i) M.col(i) = sub.points[i];
    const auto lam = qs::detail::hull_membership(M, Eigen::VectorXd::Zero(3), 1e-9);
    if (!lam) ++bad;
  }
  report(8, "full-sphere Caratheodory case", bad == 0,
         fmt("%.0f violations over 20 instances", double(bad)));
}

void criterion9() {
  long bad = 0;
  // byte-identical certificates under a repeated seeded pipeline
  for (int trial = 0; trial < 5; ++trial) {
    const auto make_pair = [&](int round) {
      const auto inst = qs::io::gen_euclid(2, 9, 8000 + trial);
      const std::string itext = qs::io::to_json(inst);
      qs::io::CertificateFile cf;
      cf.instance_digest = qs::io::sha256_hex(itext);
      cf.kind = "steinitz";
      cf.steinitz = qs::select_exact(inst.euclid(), 1.0);
      cf.verification = {"verified", 100000, 0.0};
      (void)round;
      return std::make_pair(itext, qs::io::to_json(cf));
    };
    const auto a = make_pair(0);
    const auto b = make_pair(1);
    if (a.first != b.first || a.second != b.second) ++bad;
    if (qs::io::to_json(qs::io::parse_instance(a.first)) != a.first) ++bad;
    if (qs::io::to_json(qs::io::parse_certificate(a.second)) != a.second) ++bad;
  }
  // round-trip identity across the spherical corpus
  for (const auto& e : g_corpus) {
    qs::io::InstanceFile f;
    f.kind = "spherical";
    f.dim = 3;
    f.points = e.C.points;
    qs::Cap cap;
    cap.axis = e.C.north();
    cap.rho = e.rho;
    f.cap = cap;
    f.generator = "corpus";
    f.seed = 0;
    const std::string text = qs::io::to_json(f);
    if (qs::io::to_json(qs::io::parse_instance(text)) != text) ++bad;

    qs::io::CertificateFile cf;
    cf.instance_digest = qs::io::sha256_hex(text);
    cf.kind = "spherical";
    cf.spherical = e.cert;
    cf.verification = {"verified", 100000, 1e-6};
    const std::string ctext = qs::io::to_json(cf);
    if (qs::io::to_json(qs::io::parse_certificate(ctext)) != ctext) ++bad;
  }
  report(9, "determinism and round-trip", bad == 0,
         fmt("%.0f mismatches across %.0f artifacts", double(bad), double(10 + 2 * g_corpus.size())));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
