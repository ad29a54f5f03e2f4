#pragma once

// Euler orbits and Hill-type test paths with unit masses.

#include <string>
#include <vector>

#include "symorb/loop.hpp"

namespace symorb {

struct EulerParams {
  double R = 1.0;
  int k = 1;
  double omega = 0.5;
  double alpha = 1.0;
};

struct HillParams {
  double R = 1.0;
  double d = 0.8;
  int k = 1;
  double omega = 0.5;
};

/// 2 pi [R^2 (k-omega)^2 + 2/R^alpha + 1/(2R)^alpha]
double euler_orbit_action(const EulerParams& p);

struct EulerMin {
  double R;
  double value;
};

/// Closed-form minimum over R at alpha = 1.
EulerMin euler_min_action(double omega, int k);

/// x1 = R e^{Jkt}, x2 = -x1, x3 = 0 as a spectral loop.
Loop euler_loop(const EulerParams& p);
/// x1 = d + R e^{Jkt}, x2 = d - R e^{Jkt}, x3 = -2d.
Loop hill_loop(const HillParams& p);

/// (1/2pi) int_0^{2pi} dt / |1 + eps e^{Jt}| by the trapezoid rule.
double hill_average(double eps, int points = 512);

double hill_test_action(const HillParams& p, int quad_points = 512);
double hill_action_upper_bound(const HillParams& p);

/// Exact left and right sides of 619/300 + (5/12) log(144/119) < (3/4) 25^{1/3}.
struct LineMargin {
  double hill_bound;
  double euler_min;
};
LineMargin line_symmetry_margin();

struct ScanRow {
  double omega;
  std::string branch;  // euler_k0, euler_k1, hill_k0, hill_k1, minimizer
  double value;
  std::string method;  // closed_form, bound, quadrature, descent
};

struct LineComparisonRow {
  double omega;
  double euler_k0, euler_k1;
  double hill_bound_k0, hill_bound_k1;
  double hill_quad_k0, hill_quad_k1;
  std::string winner;
};

/// Hill branches use the fixed test path R = 1, d = 4/5.
std::vector<LineComparisonRow> line_symmetry_comparison(const std::vector<double>& omega_grid);

struct Choreo21Row {
  double omega;
  double euler_k1;
  double hill_k1;
  double difference;  // hill - euler
  double derivative;  // central finite difference of `difference`
  double derivative_formula;
  bool negative;
  bool increasing;
};

std::vector<Choreo21Row> choreo21_comparison(const std::vector<double>& omega_grid);

/// Only odd windings are equivariant under the 2-1 choreography.
bool choreo21_admits(int k);

/// Rows in the scan CSV layout.
std::vector<ScanRow> scan_rows(const std::string& symmetry, const std::vector<double>& omega_grid);

}  // namespace symorb
