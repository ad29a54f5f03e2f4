#include "symorb/test_paths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symorb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_hill(const HillParams& p) {
  if (!(p.R > 0 && p.d > 0 && p.R < 3 * p.d))
    throw Error(ErrorKind::GeometryViolated, "Hill test path needs 0 < R < 3d");
}
}  // namespace

double euler_orbit_action(const EulerParams& p) {
  const double w = p.k - p.omega;
  return kTwoPi * (p.R * p.R * w * w + 2.0 * std::pow(p.R, -p.alpha) + std::pow(2.0 * p.R, -p.alpha));
}

EulerMin euler_min_action(double omega, int k) {
  const double w2 = (k - omega) * (k - omega);
  if (w2 == 0.0) throw Error(ErrorKind::DegenerateFrequency, "k equals omega");
  EulerMin r;
  r.R = std::cbrt(5.0 / (4.0 * w2));
  r.value = kTwoPi * 1.5 * std::cbrt(25.0 * w2) / std::cbrt(2.0);
  return r;
}

Loop euler_loop(const EulerParams& p) {
  const int N = std::max(1, std::abs(p.k));
  Loop x(Masses::unit(), N);
  x.c(0, p.k) = p.R;
  x.c(1, p.k) = -p.R;
  return x;
}

Loop hill_loop(const HillParams& p) {
  const int N = std::max(1, std::abs(p.k));
  Loop x(Masses::unit(), N);
  x.c(0, 0) += p.d;
  x.c(0, p.k) += p.R;
  x.c(1, 0) += p.d;
  x.c(1, p.k) -= p.R;
  x.c(2, 0) = -2.0 * p.d;
  return x;
}

double hill_average(double eps, int points) {
  double s = 0;
  for (int j = 0; j < points; ++j) s += 1.0 / std::abs(1.0 + eps * std::polar(1.0, kTwoPi * j / points));
  return s / points;
}

double hill_test_action(const HillParams& p, int quad_points) {
  check_hill(p);
  const double eps = p.R / (3.0 * p.d);
  const double w = p.k - p.omega;
  // the two outer pairs at distances 3d|1 +- eps e^{Jkt}|
  double third = p.k == 0 ? 0.5 * (1.0 / (1.0 + eps) + 1.0 / (1.0 - eps)) : hill_average(eps, quad_points);
  return kTwoPi * (3.0 * p.omega * p.omega * p.d * p.d + p.R * p.R * w * w + 1.0 / (2.0 * p.R) +
                   2.0 / (3.0 * p.d) * third);
}

double hill_action_upper_bound(const HillParams& p) {
  check_hill(p);
  const double eps = p.R / (3.0 * p.d);
  const double w = p.k - p.omega;
  // k = 0 has no averaging; its exact value is its own bound
  double third = p.k == 0 ? 1.0 / (1.0 - eps * eps) : 1.0 - 0.5 * std::log(1.0 - eps * eps);
  return kTwoPi * (3.0 * p.omega * p.omega * p.d * p.d + p.R * p.R * w * w + 1.0 / (2.0 * p.R) +
                   2.0 / (3.0 * p.d) * third);
}

LineMargin line_symmetry_margin() {
  return {619.0 / 300.0 + 5.0 / 12.0 * std::log(144.0 / 119.0), 0.75 * std::cbrt(25.0)};
}

std::vector<LineComparisonRow> line_symmetry_comparison(const std::vector<double>& omega_grid) {
  std::vector<LineComparisonRow> rows;
  for (double w : omega_grid) {
    LineComparisonRow r;
    r.omega = w;
    r.euler_k0 = euler_min_action(w, 0).value;
    r.euler_k1 = euler_min_action(w, 1).value;
    HillParams h0{1.0, 0.8, 0, w}, h1{1.0, 0.8, 1, w};
    r.hill_bound_k0 = hill_action_upper_bound(h0);
    r.hill_bound_k1 = hill_action_upper_bound(h1);
    r.hill_quad_k0 = hill_test_action(h0);
    r.hill_quad_k1 = hill_test_action(h1);
    std::pair<double, const char*> c[] = {{r.euler_k0, "euler_k0"},
                                          {r.euler_k1, "euler_k1"},
                                          {r.hill_quad_k0, "hill_k0"},
                                          {r.hill_quad_k1, "hill_k1"}};
    r.winner = std::min_element(std::begin(c), std::end(c))->second;
    rows.push_back(r);
  }
  return rows;
}

bool choreo21_admits(int k) { return k % 2 != 0; }

std::vector<Choreo21Row> choreo21_comparison(const std::vector<double>& omega_grid) {
  auto diff = [](double w) {
    return hill_test_action({1.0, 0.8, 1, w}) - euler_min_action(w, 1).value;
  };
  std::vector<Choreo21Row> rows;
  const double h = 1e-5;
  for (double w : omega_grid) {
    Choreo21Row r;
    r.omega = w;
    r.euler_k1 = euler_min_action(w, 1).value;
    r.hill_k1 = hill_test_action({1.0, 0.8, 1, w});
    r.difference = r.hill_k1 - r.euler_k1;
    r.derivative = (diff(w + h) - diff(w - h)) / (2 * h);
    r.derivative_formula = kTwoPi * (146.0 / 25.0 * w - 2.0 + std::cbrt(12.5) * std::pow(1.0 - w, -1.0 / 3.0));
    r.negative = r.difference < 0;
    r.increasing = r.derivative > 0;
    rows.push_back(r);
  }
  return rows;
}

std::vector<ScanRow> scan_rows(const std::string& symmetry, const std::vector<double>& omega_grid) {
  if (symmetry != "line" && symmetry != "choreo21")
    throw Error(ErrorKind::UnknownName, "scan symmetry must be line or choreo21");
  const bool line = symmetry == "line";
  std::vector<ScanRow> rows;
  for (double w : omega_grid) {
    for (int k : {0, 1}) {
      if (!line && !choreo21_admits(k)) continue;
      const std::string tag = "_k" + std::to_string(k);
      if (k - w != 0.0) rows.push_back({w, "euler" + tag, euler_min_action(w, k).value, "closed_form"});
      HillParams hp{1.0, 0.8, k, w};
      rows.push_back({w, "hill" + tag, hill_test_action(hp), "quadrature"});
      rows.push_back({w, "hill" + tag, hill_action_upper_bound(hp), "bound"});
    }
  }
  return rows;
}

}  // namespace symorb
