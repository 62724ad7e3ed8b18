// qsw: generate instances, run the selectors, verify certificates, benchmark.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qs/io.hpp"
#include "qs/oracles.hpp"
#include "qs/pipeline.hpp"
#include "qs/random.hpp"
#include "qs/steinitz.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPremise = 1;
constexpr int kVerifyFail = 2;
constexpr int kScale = 3;
constexpr int kIo = 4;

constexpr long long kVerifySamples = 100000;
constexpr double kMcMargin = 1e-6;

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  qs::io::Verification verification;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

bool indices_valid(const std::vector<int>& idx, int n) {
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return !s.empty() && s.front() >= 0 && s.back() < n;
}

double exact_radius(const qs::EuclideanPointSet& Q,
                    double stop_at = std::numeric_limits<double>::infinity()) {
  return Q.size() <= qs::guards().enum_max_points
             ? qs::containment_radius(Q)
             : qs::detail::adaptive_containment_radius(Q, stop_at);
}

void verify_steinitz(const qs::io::InstanceFile& inst, const qs::io::CertificateFile& cert,
                     VerifyReport& rep) {
  rep.check(inst.kind == "euclidean", "certificate kind does not match the instance");
  rep.check(cert.steinitz.has_value(), "missing steinitz payload");
  if (!rep.ok) return;
  const auto& c = *cert.steinitz;
  const qs::EuclideanPointSet Q = inst.euclid();

  rep.check(indices_valid(c.indices, Q.size()), "indices out of range or duplicated");
  rep.check(c.cardinality_bound == 2 * Q.dim, "cardinality_bound is not 2*dim");
  rep.check(static_cast<int>(c.indices.size()) <= c.cardinality_bound,
            "selection exceeds the cardinality bound");
  const double premise = inst.premise_radius.value_or(1.0);
  rep.check(std::abs(c.premise_radius - premise) <= 1e-12,
            "certificate premise_radius disagrees with the instance");
  if (!rep.ok) return;

  try {
    const double full = exact_radius(Q, c.premise_radius);
    rep.check(full >= c.premise_radius - qs::tol::premise,
              "instance does not contain the premise ball");
  } catch (const qs::PremiseViolated&) {
    rep.check(false, "origin is not interior to the instance hull");
  }

  double achieved = 0.0;
  try {
    achieved = exact_radius(Q.subset(c.indices));
  } catch (const qs::PremiseViolated&) {
    rep.check(false, "origin is not interior to the selected hull");
    return;
  }
  rep.check(std::abs(achieved - c.achieved_radius) <= qs::tol::premise,
            "achieved_radius does not match the recomputed radius");

  qs::RandomSource rng(1, 900);
  const double mc =
      qs::mc_containment_radius(Q.subset(c.indices), static_cast<int>(kVerifySamples), rng);
  rep.check(mc >= c.achieved_radius - qs::tol::premise,
            "Monte-Carlo estimate fell below the claimed radius");
  rep.verification.oracle_samples = kVerifySamples;
  rep.verification.margin = mc - c.achieved_radius;
}

void verify_spherical(const qs::io::InstanceFile& inst, const qs::io::CertificateFile& cert,
                      VerifyReport& rep) {
  rep.check(inst.kind == "spherical", "certificate kind does not match the instance");
  rep.check(cert.spherical.has_value(), "missing spherical payload");
  if (!rep.ok) return;
  const auto& c = *cert.spherical;
  const qs::SphericalPointSet C = inst.spherical();
  const int d = C.sphere_dim();
  const double rho = inst.cap->rho;

  rep.check(indices_valid(c.indices, C.size()), "indices out of range or duplicated");
  const int bound = c.case_tag == qs::CaseTag::full_sphere ? d + 2 : 2 * d;
  rep.check(static_cast<int>(c.indices.size()) <= bound,
            "selection exceeds the cardinality bound for its case");
  rep.check(c.certified_cap >= 0.0 && c.achieved_cap >= 0.0, "cap radii must be nonnegative");
  rep.check(c.certified_cap <= c.achieved_cap + qs::tol::premise,
            "certified_cap exceeds achieved_cap");
  if (!rep.ok) return;

  rep.check(qs::largest_cap_about_axis(C, C.north()) >= rho - qs::tol::premise,
            "instance does not contain the premise cap");

  const qs::SphericalPointSet sub = C.subset(c.indices);
  const double achieved = qs::largest_cap_about_axis(sub, C.north());
  rep.check(std::abs(achieved - c.achieved_cap) <= qs::tol::premise,
            "achieved_cap does not match the recomputed cap");

  switch (c.case_tag) {
    case qs::CaseTag::full_sphere:
      rep.check(!c.polarity_center_shifted, "full_sphere cannot be center-shifted");
      rep.check(std::abs(c.achieved_cap - std::numbers::pi) <= qs::tol::premise,
                "full_sphere certificate must achieve cap pi");
      break;
    case qs::CaseTag::northern:
      rep.check(!c.polarity_center_shifted, "northern case cannot be center-shifted");
      [[fallthrough]];
    case qs::CaseTag::general:
      rep.check(c.internal_radius.has_value(), "missing internal_radius");
      if (c.internal_radius && !c.polarity_center_shifted) {
        const double expect = qs::certified_cap_radius(rho, std::min(*c.internal_radius, 1.0));
        rep.check(std::abs(c.certified_cap - expect) <= 1e-9,
                  "certified_cap disagrees with the case formula");
      }
      break;
  }
  if (!rep.ok) return;

  qs::Cap probe;
  probe.axis = C.north();
  probe.rho = c.achieved_cap;
  qs::RandomSource rng(1, 901);
  rep.check(qs::mc_cap_contained(sub, probe, static_cast<int>(kVerifySamples), rng, kMcMargin),
            "Monte-Carlo cap sample escaped the selected hull");
  rep.verification.oracle_samples = kVerifySamples;
  rep.verification.margin = kMcMargin;
}

VerifyReport verify_certificate(const qs::io::InstanceFile& inst, const std::string& digest,
                                const qs::io::CertificateFile& cert) {
  VerifyReport rep;
  rep.check(cert.instance_digest == digest, "instance digest mismatch");
  if (rep.ok) {
    if (cert.kind == "steinitz")
      verify_steinitz(inst, cert, rep);
    else if (cert.kind == "spherical")
      verify_spherical(inst, cert, rep);
    else
      rep.check(false, "unknown certificate kind");
  }
  rep.verification.status = rep.ok ? "verified" : "failed";
  return rep;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_report(bool json, const VerifyReport& rep) {
  if (json) {
    std::string out = "{\"status\":\"" + rep.verification.status + "\",\"failures\":[";
    for (size_t i = 0; i < rep.failures.size(); ++i) {
      if (i) out += ',';
      out += '"' + rep.failures[i] + '"';
    }
    out += "],\"oracle_samples\":" + std::to_string(rep.verification.oracle_samples);
    out += ",\"margin\":" + fmt(rep.verification.margin) + "}";
    std::printf("%s\n", out.c_str());
  } else {
    if (rep.ok) {
      std::printf("verified (oracle samples: %lld, margin: %.3g)\n",
                  rep.verification.oracle_samples, rep.verification.margin);
    } else {
      for (const auto& f : rep.failures) std::printf("FAIL: %s\n", f.c_str());
    }
  }
}

int cmd_gen_euclid(int dim, int n, std::uint64_t seed, const std::string& out, bool json) {
  const qs::io::InstanceFile f = qs::io::gen_euclid(dim, n, seed);
  qs::io::write_file(out, qs::io::to_json(f));
  if (json)
    std::printf("{\"output\":\"%s\",\"points\":%zu}\n", out.c_str(), f.points.size());
  else
    std::printf("wrote %s (%zu points, dim %d)\n", out.c_str(), f.points.size(), dim);
  return kOk;
}

int cmd_gen_sphere(int dim, int n, double rho, std::uint64_t seed, double fraction,
                   const std::string& out, bool json) {
  const qs::io::InstanceFile f = qs::io::gen_sphere(dim, n, rho, seed, fraction);
  qs::io::write_file(out, qs::io::to_json(f));
  if (json)
    std::printf("{\"output\":\"%s\",\"points\":%zu}\n", out.c_str(), f.points.size());
  else
    std::printf("wrote %s (%zu points on S^%d, rho %.6g)\n", out.c_str(), f.points.size(), dim,
                rho);
  return kOk;
}

int cmd_select_euclid(const std::string& in, const std::string& out, const std::string& method,
                      bool json) {
  const std::string digest = qs::io::sha256_hex(qs::io::read_file(in));
  const qs::io::InstanceFile inst = qs::io::load_instance(in);
  const qs::EuclideanPointSet Q = inst.euclid();
  const double premise = inst.premise_radius.value_or(1.0);

  qs::io::CertificateFile cert;
  cert.instance_digest = digest;
  cert.kind = "steinitz";
  cert.steinitz = method == "greedy" ? qs::select_greedy(Q, premise)
                                     : qs::select_exact(Q, premise);

  VerifyReport rep = verify_certificate(inst, digest, cert);
  cert.verification = rep.verification;
  qs::io::write_file(out, qs::io::to_json(cert));
  if (json) {
    std::printf("{\"output\":\"%s\",\"achieved_radius\":%s,\"cardinality\":%zu,\"status\":\"%s\"}\n",
                out.c_str(), fmt(cert.steinitz->achieved_radius).c_str(),
                cert.steinitz->indices.size(), rep.verification.status.c_str());
  } else {
    std::printf("selected %zu points, achieved_radius %.12g -> %s\n",
                cert.steinitz->indices.size(), cert.steinitz->achieved_radius, out.c_str());
    print_report(false, rep);
  }
  return rep.ok ? kOk : kVerifyFail;
}

int cmd_select_sphere(const std::string& in, const std::string& out, bool json) {
  const std::string digest = qs::io::sha256_hex(qs::io::read_file(in));
  const qs::io::InstanceFile inst = qs::io::load_instance(in);
  const qs::SphericalPointSet C = inst.spherical();
  if (!inst.cap) throw qs::SchemaError("spherical instance requires a cap");

  qs::io::CertificateFile cert;
  cert.instance_digest = digest;
  cert.kind = "spherical";
  cert.spherical = qs::select_spherical(C, inst.cap->rho);

  VerifyReport rep = verify_certificate(inst, digest, cert);
  cert.verification = rep.verification;
  qs::io::write_file(out, qs::io::to_json(cert));
  if (json) {
    std::printf(
        "{\"output\":\"%s\",\"case\":\"%s\",\"achieved_cap\":%s,\"certified_cap\":%s,"
        "\"cardinality\":%zu,\"status\":\"%s\"}\n",
        out.c_str(), qs::to_string(cert.spherical->case_tag).c_str(),
        fmt(cert.spherical->achieved_cap).c_str(), fmt(cert.spherical->certified_cap).c_str(),
        cert.spherical->indices.size(), rep.verification.status.c_str());
  } else {
    std::printf("selected %zu points (%s), achieved_cap %.12g, certified_cap %.12g -> %s\n",
                cert.spherical->indices.size(), qs::to_string(cert.spherical->case_tag).c_str(),
                cert.spherical->achieved_cap, cert.spherical->certified_cap, out.c_str());
    print_report(false, rep);
  }
  return rep.ok ? kOk : kVerifyFail;
}

int cmd_verify(const std::string& inst_path, const std::string& cert_path, bool json) {
  const std::string digest = qs::io::sha256_hex(qs::io::read_file(inst_path));
  const qs::io::InstanceFile inst = qs::io::load_instance(inst_path);
  const qs::io::CertificateFile cert = qs::io::parse_certificate(qs::io::read_file(cert_path));
  const VerifyReport rep = verify_certificate(inst, digest, cert);
  print_report(json, rep);
  return rep.ok ? kOk : kVerifyFail;
}

int cmd_bench(const std::vector<int>& dims, int trials, std::uint64_t seed,
              const std::string& report, bool json) {
  std::string rows;
  for (int d : dims) {
    double min_radius = std::numeric_limits<double>::infinity();
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = seed + 1000ull * static_cast<std::uint64_t>(d) + t;
      const qs::io::InstanceFile ef = qs::io::gen_euclid(d, 2 * d + 4, s);
      const qs::SteinitzCertificate sc = qs::select_exact(ef.euclid(), 1.0);
      min_radius = std::min(min_radius, sc.achieved_radius);

      qs::RandomSource pick(s, 2);
      const double rho = pick.uniform(0.1, 1.0);
      const double fraction = (t % 2) ? 0.3 : 0.0;
      const qs::io::InstanceFile sf = qs::io::gen_sphere(d, 2 * d + 4, rho, s, fraction);
      const qs::SphericalCertificate cc = qs::select_spherical(sf.spherical(), rho);
      min_ratio = std::min(min_ratio, cc.achieved_cap / rho);
    }
    const qs::RBound rb = qs::r_bound(d);
    if (!rows.empty()) rows += ',';
    rows += "{\"dim\":" + std::to_string(d);
    rows += ",\"min_achieved_radius\":" + fmt(min_radius);
    rows += ",\"min_cap_ratio\":" + fmt(min_ratio);
    rows += ",\"bracket_lower\":" + fmt(rb.lower);
    rows += ",\"bracket_upper\":" + fmt(rb.upper) + "}";
    if (!json)
      std::printf("d=%d: min achieved_radius %.6g, min achieved_cap/rho %.6g, bracket [%.6g, %.6g]\n",
                  d, min_radius, min_ratio, rb.lower, rb.upper);
  }
  const std::string doc = "{\"schema_version\":1,\"trials\":" + std::to_string(trials) +
                          ",\"dims\":[" + rows + "]}\n";
  if (!report.empty()) qs::io::write_file(report, doc);
  if (json) std::printf("%s", doc.c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantified point-selection workbench"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  int g_dim = 2, g_n = 8;
  std::uint64_t g_seed = 0;
  double g_rho = 0.5, g_fraction = 0.0;
  std::string g_out = "instance.json";
  auto* gen_e = gen->add_subcommand("euclid", "points containing the unit ball");
  gen_e->add_option("--dim", g_dim, "ambient dimension")->required();
  gen_e->add_option("--n", g_n, "number of points")->required();
  gen_e->add_option("--seed", g_seed, "random seed")->required();
  gen_e->add_option("-o,--output", g_out, "output path");
  auto* gen_s = gen->add_subcommand("sphere", "points whose hull contains a polar cap");
  gen_s->add_option("--dim", g_dim, "sphere dimension d (points live in R^(d+1))")->required();
  gen_s->add_option("--n", g_n, "number of points")->required();
  gen_s->add_option("--rho", g_rho, "premise cap radius in (0, pi/2)")->required();
  gen_s->add_option("--seed", g_seed, "random seed")->required();
  gen_s->add_option("--southern-fraction", g_fraction, "fraction of extras below the equator");
  gen_s->add_option("-o,--output", g_out, "output path");

  auto* sel = app.add_subcommand("select", "run a selector and emit a certificate");
  sel->require_subcommand(1);
  std::string s_in, s_out = "certificate.json", s_method = "exact";
  auto* sel_e = sel->add_subcommand("euclid", "Steinitz selection");
  sel_e->add_option("-i,--instance", s_in, "instance file")->required();
  sel_e->add_option("-o,--output", s_out, "certificate path");
  sel_e->add_option("--method", s_method, "exact | greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  auto* sel_s = sel->add_subcommand("sphere", "spherical cap selection");
  sel_s->add_option("-i,--instance", s_in, "instance file")->required();
  sel_s->add_option("-o,--output", s_out, "certificate path");

  auto* ver = app.add_subcommand("verify", "re-check a certificate against its instance");
  std::string v_inst, v_cert;
  ver->add_option("--instance", v_inst, "instance file")->required();
  ver->add_option("--certificate", v_cert, "certificate file")->required();

  auto* ben = app.add_subcommand("bench", "empirical constants per dimension");
  std::string b_dims = "2,3", b_report;
  int b_trials = 10;
  std::uint64_t b_seed = 1;
  ben->add_option("--dims", b_dims, "comma-separated dimensions");
  ben->add_option("--trials", b_trials, "trials per dimension")->check(CLI::PositiveNumber);
  ben->add_option("--seed", b_seed, "base seed");
  ben->add_option("--report", b_report, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_e->parsed()) return cmd_gen_euclid(g_dim, g_n, g_seed, g_out, json);
    if (gen_s->parsed())
      return cmd_gen_sphere(g_dim, g_n, g_rho, g_seed, g_fraction, g_out, json);
    if (sel_e->parsed()) return cmd_select_euclid(s_in, s_out, s_method, json);
    if (sel_s->parsed()) return cmd_select_sphere(s_in, s_out, json);
    if (ver->parsed()) return cmd_verify(v_inst, v_cert, json);
    if (ben->parsed()) {
      std::vector<int> dims;
      std::stringstream ss(b_dims);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) dims.push_back(std::stoi(tok));
      }
      if (dims.empty()) throw std::invalid_argument("--dims is empty");
      return cmd_bench(dims, b_trials, b_seed, b_report, json);
    }
    std::fprintf(stderr, "no subcommand\n");
    return kIo;
  } catch (const qs::PremiseViolated& e) {
    std::fprintf(stderr, "premise violated: %s\n", e.what());
    return kPremise;
  } catch (const qs::EquatorSingularity& e) {
    std::fprintf(stderr, "premise violated: %s\n", e.what());
    return kPremise;
  } catch (const qs::ScaleLimit& e) {
    std::fprintf(stderr, "scale limit: %s\n", e.what());
    return kScale;
  } catch (const qs::SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  }
}
