#include "symorb/io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace symorb {

namespace {

constexpr const char* kSchema = "symorb-orbit/1";

using nlohmann::json;

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::SchemaError, std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace

std::uint64_t modes_checksum(const std::vector<cd>& modes) {
  std::uint64_t h = 1469598103934665603ULL;
  char buf[64];
  for (const auto& z : modes) {
    int n = std::snprintf(buf, sizeof buf, "%.17g,%.17g;", z.real(), z.imag());
    for (int k = 0; k < n; ++k) {
      h ^= static_cast<unsigned char>(buf[k]);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string orbit_to_json(const OrbitRecord& r) {
  const Loop& x = r.result.loop;
  json modes = json::array();
  for (int i = 0; i < 3; ++i)
    for (int n = -x.N; n <= x.N; ++n) modes.push_back({i, n, x.c(i, n).real(), x.c(i, n).imag()});
  char sum[32];
  std::snprintf(sum, sizeof sum, "%016llx", static_cast<unsigned long long>(modes_checksum(x.modes)));
  json j = {{"schema", kSchema},
            {"group", r.group_name},
            {"generators", r.generators},
            {"group_order", r.group_order},
            {"masses", {x.masses[0], x.masses[1], x.masses[2]}},
            {"omega", r.omega},
            {"alpha", r.alpha},
            {"seed", r.seed},
            {"quad_points", r.quad_points},
            {"N", x.N},
            {"action", r.result.action},
            {"gradient_norm", r.result.gradient_norm},
            {"iterations", r.result.iterations},
            {"min_pair_distance", r.result.min_pair_distance},
            {"angular_momentum", r.angular_momentum},
            {"converged", r.result.converged},
            {"modes", modes},
            {"checksum", sum}};
  return j.dump(2) + "\n";
}

OrbitRecord orbit_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || field<std::string>(j, "schema") != kSchema)
    throw Error(ErrorKind::SchemaError, "unknown schema");
  OrbitRecord r;
  r.group_name = field<std::string>(j, "group");
  r.generators = field<std::string>(j, "generators");
  r.group_order = field<std::size_t>(j, "group_order");
  r.omega = field<double>(j, "omega");
  r.alpha = field<double>(j, "alpha");
  r.seed = field<std::uint64_t>(j, "seed");
  r.quad_points = field<int>(j, "quad_points");
  auto m = field<std::vector<double>>(j, "masses");
  if (m.size() != 3) throw Error(ErrorKind::SchemaError, "masses must have three entries");
  const int N = field<int>(j, "N");
  if (N < 0) throw Error(ErrorKind::SchemaError, "N must be nonnegative");
  Loop x(Masses{{m[0], m[1], m[2]}}, N);
  auto modes = field<std::vector<std::vector<double>>>(j, "modes");
  if (modes.size() != x.modes.size()) throw Error(ErrorKind::SchemaError, "mode count does not match N");
  std::vector<bool> seen(x.modes.size(), false);
  for (const auto& e : modes) {
    if (e.size() != 4) throw Error(ErrorKind::SchemaError, "each mode is [i, n, re, im]");
    const int i = static_cast<int>(e[0]), n = static_cast<int>(e[1]);
    if (e[0] != i || e[1] != n || i < 0 || i > 2 || n < -N || n > N)
      throw Error(ErrorKind::SchemaError, "mode index out of range");
    if (seen[x.index(i, n)]) throw Error(ErrorKind::SchemaError, "duplicate mode");
    seen[x.index(i, n)] = true;
    x.c(i, n) = cd(e[2], e[3]);
  }
  char sum[32];
  std::snprintf(sum, sizeof sum, "%016llx", static_cast<unsigned long long>(modes_checksum(x.modes)));
  if (field<std::string>(j, "checksum") != sum) throw Error(ErrorKind::ChecksumMismatch, "modes checksum differs");
  r.result.loop = std::move(x);
  r.result.action = field<double>(j, "action");
  r.result.gradient_norm = field<double>(j, "gradient_norm");
  r.result.iterations = field<int>(j, "iterations");
  r.result.min_pair_distance = field<double>(j, "min_pair_distance");
  r.result.converged = field<bool>(j, "converged");
  r.angular_momentum = field<double>(j, "angular_momentum");

  SymmetryGroup G;
  try {
    G = generate_closure(parse_generators(r.generators));
  } catch (const Error& e) {
    throw Error(ErrorKind::SchemaError, std::string("stored group does not parse: ") + e.what());
  }
  if (G.order() != r.group_order) throw Error(ErrorKind::SchemaError, "stored group order disagrees with closure");
  return r;
}

void save_orbit(const std::string& path, const OrbitRecord& r) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::DomainError, "cannot write " + path);
  f << orbit_to_json(r);
}

OrbitRecord load_orbit(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::SchemaError, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return orbit_from_json(ss.str());
}

std::string trajectory_csv(const Loop& x, int samples) {
  std::string out = "t,x1re,x1im,x2re,x2im,x3re,x3im\n";
  char buf[512];
  for (int k = 0; k < samples; ++k) {
    double t = 2.0 * std::numbers::pi * k / samples;
    Configuration c = x.eval(t);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, c[0].real(), c[0].imag(),
                  c[1].real(), c[1].imag(), c[2].real(), c[2].imag());
    out += buf;
  }
  return out;
}

}  // namespace symorb
