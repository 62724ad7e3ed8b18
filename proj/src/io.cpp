#include "qs/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qs/random.hpp"

namespace qs::io {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  if (!std::isfinite(v)) throw SchemaError("non-finite number in serialization");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void emit_vector(std::string& out, const Eigen::VectorXd& v) {
  out += '[';
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_double(v(i));
  }
  out += ']';
}

void emit_indices(std::string& out, const std::vector<int>& idx) {
  out += '[';
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  out += ']';
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

double as_double(const json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return j.get<double>();
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Eigen::VectorXd as_vector(const json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw SchemaError(std::string(what) + " must be an array of length " + std::to_string(dim));
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = as_double(j[i], what);
  return v;
}

std::vector<int> as_indices(const json& j) {
  if (!j.is_array()) throw SchemaError("indices must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    const int v = as_int(e, "index");
    if (v < 0) throw SchemaError("indices must be nonnegative");
    out.push_back(v);
  }
  return out;
}

}  // namespace

EuclideanPointSet InstanceFile::euclid() const {
  if (kind != "euclidean") throw SchemaError("instance is not euclidean");
  return make_point_set(dim, points);
}

SphericalPointSet InstanceFile::spherical() const {
  if (kind != "spherical") throw SchemaError("instance is not spherical");
  return make_spherical(dim, points);
}

std::string to_json(const InstanceFile& f) {
  std::string out;
  out += "{\"schema_version\":" + std::to_string(kSchemaVersion);
  out += ",\"kind\":\"" + escape(f.kind) + "\"";
  out += ",\"dim\":" + std::to_string(f.dim);
  out += ",\"points\":[";
  for (size_t i = 0; i < f.points.size(); ++i) {
    if (i) out += ',';
    emit_vector(out, f.points[i]);
  }
  out += ']';
  if (f.cap) {
    out += ",\"cap\":{\"axis\":";
    emit_vector(out, f.cap->axis);
    out += ",\"rho\":" + fmt_double(f.cap->rho) + "}";
  }
  if (f.premise_radius) out += ",\"premise_radius\":" + fmt_double(*f.premise_radius);
  out += ",\"metadata\":{\"generator\":\"" + escape(f.generator) + "\"";
  out += ",\"seed\":" + std::to_string(f.seed);
  out += ",\"axis_aligned\":" + std::string(f.axis_aligned ? "true" : "false") + "}}";
  out += '\n';
  return out;
}

std::string to_json(const CertificateFile& f) {
  std::string out;
  out += "{\"schema_version\":" + std::to_string(kSchemaVersion);
  out += ",\"instance_digest\":\"" + escape(f.instance_digest) + "\"";
  out += ",\"kind\":\"" + escape(f.kind) + "\"";
  out += ",\"certificate\":{";
  if (f.kind == "steinitz") {
    if (!f.steinitz) throw SchemaError("missing steinitz payload");
    const auto& c = *f.steinitz;
    out += "\"indices\":";
    emit_indices(out, c.indices);
    out += ",\"achieved_radius\":" + fmt_double(c.achieved_radius);
    out += ",\"method\":\"" + to_string(c.method) + "\"";
    out += ",\"cardinality_bound\":" + std::to_string(c.cardinality_bound);
    out += ",\"premise_radius\":" + fmt_double(c.premise_radius);
  } else if (f.kind == "spherical") {
    if (!f.spherical) throw SchemaError("missing spherical payload");
    const auto& c = *f.spherical;
    out += "\"indices\":";
    emit_indices(out, c.indices);
    out += ",\"case_tag\":\"" + qs::to_string(c.case_tag) + "\"";
    out += ",\"achieved_cap\":" + fmt_double(c.achieved_cap);
    out += ",\"certified_cap\":" + fmt_double(c.certified_cap);
    out += ",\"internal_radius\":" +
           (c.internal_radius ? fmt_double(*c.internal_radius) : std::string("null"));
    out += ",\"polarity_center_shifted\":" +
           std::string(c.polarity_center_shifted ? "true" : "false");
  } else {
    throw SchemaError("unknown certificate kind: " + f.kind);
  }
  out += "},\"verification\":{\"status\":\"" + escape(f.verification.status) + "\"";
  out += ",\"oracle_samples\":" + std::to_string(f.verification.oracle_samples);
  out += ",\"margin\":" + fmt_double(f.verification.margin) + "}}";
  out += '\n';
  return out;
}

InstanceFile parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  if (as_int(require(j, "schema_version"), "schema_version") != kSchemaVersion)
    throw SchemaError("unsupported schema version");

  InstanceFile f;
  f.kind = as_string(require(j, "kind"), "kind");
  if (f.kind != "euclidean" && f.kind != "spherical")
    throw SchemaError("kind must be euclidean or spherical");
  f.dim = as_int(require(j, "dim"), "dim");
  if (f.dim < 1 || f.dim > 64) throw SchemaError("dim out of range");

  const json& pts = require(j, "points");
  if (!pts.is_array() || pts.empty()) throw SchemaError("points must be a nonempty array");
  for (const auto& p : pts) f.points.push_back(as_vector(p, f.dim, "point"));

  if (j.contains("cap")) {
    const json& c = j["cap"];
    Cap cap;
    cap.axis = as_vector(require(c, "axis"), f.dim, "cap axis");
    cap.rho = as_double(require(c, "rho"), "cap rho");
    if (cap.rho < 0.0 || cap.rho > std::numbers::pi) throw SchemaError("cap rho outside [0, pi]");
    f.cap = cap;
  }
  if (j.contains("premise_radius"))
    f.premise_radius = as_double(j["premise_radius"], "premise_radius");

  const json& meta = require(j, "metadata");
  f.generator = as_string(require(meta, "generator"), "generator");
  const json& seed = require(meta, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw SchemaError("seed must be an integer");
  f.seed = seed.get<std::uint64_t>();
  if (meta.contains("axis_aligned")) {
    if (!meta["axis_aligned"].is_boolean()) throw SchemaError("axis_aligned must be boolean");
    f.axis_aligned = meta["axis_aligned"].get<bool>();
  }

  if (f.kind == "spherical" && !f.cap) throw SchemaError("spherical instance requires a cap");
  if (f.kind == "euclidean" && f.cap) throw SchemaError("euclidean instance cannot carry a cap");
  return f;
}

CertificateFile parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("certificate must be a JSON object");
  if (as_int(require(j, "schema_version"), "schema_version") != kSchemaVersion)
    throw SchemaError("unsupported schema version");

  CertificateFile f;
  f.instance_digest = as_string(require(j, "instance_digest"), "instance_digest");
  f.kind = as_string(require(j, "kind"), "kind");
  const json& c = require(j, "certificate");

  if (f.kind == "steinitz") {
    SteinitzCertificate s;
    s.indices = as_indices(require(c, "indices"));
    s.achieved_radius = as_double(require(c, "achieved_radius"), "achieved_radius");
    const std::string m = as_string(require(c, "method"), "method");
    if (m == "exact")
      s.method = SelectMethod::exact;
    else if (m == "greedy")
      s.method = SelectMethod::greedy;
    else
      throw SchemaError("method must be exact or greedy");
    s.cardinality_bound = as_int(require(c, "cardinality_bound"), "cardinality_bound");
    s.premise_radius = as_double(require(c, "premise_radius"), "premise_radius");
    f.steinitz = std::move(s);
  } else if (f.kind == "spherical") {
    SphericalCertificate s;
    s.indices = as_indices(require(c, "indices"));
    const std::string tag = as_string(require(c, "case_tag"), "case_tag");
    if (tag == "full_sphere")
      s.case_tag = CaseTag::full_sphere;
    else if (tag == "northern")
      s.case_tag = CaseTag::northern;
    else if (tag == "general")
      s.case_tag = CaseTag::general;
    else
      throw SchemaError("unknown case_tag: " + tag);
    s.achieved_cap = as_double(require(c, "achieved_cap"), "achieved_cap");
    s.certified_cap = as_double(require(c, "certified_cap"), "certified_cap");
    const json& ir = require(c, "internal_radius");
    if (!ir.is_null()) s.internal_radius = as_double(ir, "internal_radius");
    const json& sh = require(c, "polarity_center_shifted");
    if (!sh.is_boolean()) throw SchemaError("polarity_center_shifted must be boolean");
    s.polarity_center_shifted = sh.get<bool>();
    f.spherical = std::move(s);
  } else {
    throw SchemaError("unknown certificate kind: " + f.kind);
  }

  const json& v = require(j, "verification");
  f.verification.status = as_string(require(v, "status"), "status");
  f.verification.oracle_samples = require(v, "oracle_samples").get<long long>();
  f.verification.margin = as_double(require(v, "margin"), "margin");
  return f;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << content;
  if (!out) throw SchemaError("write failed: " + path);
}

InstanceFile load_instance(const std::string& path) {
  InstanceFile f = parse_instance(read_file(path));
  if (f.kind == "spherical") {
    for (auto& p : f.points) {
      const double n = p.norm();
      if (std::abs(n - 1.0) > 1e-9)
        throw SchemaError("spherical point not unit-normalized within 1e-9");
      p /= n;
    }
    Eigen::VectorXd north = Eigen::VectorXd::Zero(f.dim);
    north(f.dim - 1) = 1.0;
    Eigen::VectorXd axis = f.cap->axis;
    const double an = axis.norm();
    if (std::abs(an - 1.0) > 1e-9) throw SchemaError("cap axis not unit-normalized within 1e-9");
    axis /= an;
    if ((axis - north).norm() > 1e-12) {
      // reflect the axis onto the pole; caps and hulls are isometry-covariant
      Eigen::VectorXd u = north - axis;
      u.normalize();
      for (auto& p : f.points) p -= 2.0 * u.dot(p) * u;
      for (auto& p : f.points) p /= p.norm();
      f.axis_aligned = true;
    }
    f.cap->axis = north;
  }
  return f;
}

InstanceFile gen_euclid(int dim, int n, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("dim must be >= 2");
  if (n < 2 * dim) throw std::invalid_argument("n must be at least 2*dim");
  RandomSource rng(seed, 0);

  std::vector<Eigen::VectorXd> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(rng.unit_vector(dim) * rng.uniform(1.05, 3.0));

  const EuclideanPointSet Q = make_point_set(dim, pts);
  const bool ok =
      contains_origin_interior(Q) && qs::detail::adaptive_containment_radius(Q, 1.0) >= 1.0;
  if (!ok) {
    // cover the unit ball with a scaled cross-polytope, then trim extras
    std::vector<int> originals(n);
    for (int i = 0; i < n; ++i) originals[i] = i;
    for (int k = 0; k < 2 * dim; ++k) {
      const size_t pick = static_cast<size_t>(rng.next_u64() % originals.size());
      originals.erase(originals.begin() + pick);
    }
    std::vector<Eigen::VectorXd> kept;
    for (int i : originals) kept.push_back(pts[i]);
    const double s = 1.05 * std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; ++j) {
      for (int sgn : {+1, -1}) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v(j) = sgn * s;
        kept.push_back(v);
      }
    }
    pts = std::move(kept);
  }

  const EuclideanPointSet out_set = make_point_set(dim, pts);
  if (qs::detail::adaptive_containment_radius(out_set, 1.0) < 1.0 - 1e-12)
    throw std::runtime_error("generator failed to establish the ball premise");

  InstanceFile f;
  f.kind = "euclidean";
  f.dim = dim;
  f.points = std::move(pts);
  f.premise_radius = 1.0;
  f.generator = "ball-cover";
  f.seed = seed;
  return f;
}

InstanceFile gen_sphere(int dim, int n, double rho, std::uint64_t seed,
                        double southern_fraction) {
  if (dim < 2) throw std::invalid_argument("dim must be >= 2");
  if (!(rho > 0.0 && rho < std::numbers::pi / 2))
    throw std::invalid_argument("rho must lie in (0, pi/2)");
  if (!(southern_fraction >= 0.0 && southern_fraction < 1.0))
    throw std::invalid_argument("southern_fraction must lie in [0, 1)");
  if (n < 2 * dim) throw std::invalid_argument("n must be at least 2*dim");
  RandomSource rng(seed, 1);

  const int D = dim + 1;
  // ring colatitude from the inverse of the cross-ring cap formula, 10% slack
  const double theta = std::atan(1.1 * std::sqrt(static_cast<double>(dim)) * std::tan(rho));
  std::vector<Eigen::VectorXd> pts;
  for (int j = 0; j < dim; ++j) {
    for (int sgn : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(D);
      v(j) = sgn * std::sin(theta);
      v(D - 1) = std::cos(theta);
      pts.push_back(v);
    }
  }
  const int extras = n - 2 * dim;
  const int n_south = static_cast<int>(southern_fraction * extras);
  // northern extras scale with the ring so instance size tracks the cap
  const double lo = 0.1 * theta;
  const double hi = std::min(std::numbers::pi / 2 - 0.05, 2.5 * theta);
  for (int i = 0; i < extras; ++i) {
    const bool south = i < n_south;
    const double colat = south ? rng.uniform(std::numbers::pi / 2 + 0.05, 2.2)
                               : rng.uniform(lo, hi);
    const Eigen::VectorXd w = rng.unit_vector(dim);
    Eigen::VectorXd v(D);
    v.head(dim) = std::sin(colat) * w;
    v(D - 1) = std::cos(colat);
    pts.push_back(v);
  }

  const SphericalPointSet C = make_spherical(D, pts);
  if (largest_cap_about_axis(C, C.north()) < rho)
    throw std::runtime_error("generator failed the cap premise");

  InstanceFile f;
  f.kind = "spherical";
  f.dim = D;
  f.points = C.points;
  Cap cap;
  cap.axis = C.north();
  cap.rho = rho;
  f.cap = cap;
  f.generator = "ring+uniform";
  f.seed = seed;
  return f;
}

}  // namespace qs::io
