#pragma once

// Collision-exclusion apparatus: parabolic trajectories, standard variations,
// the angular kernel Phi and the inequality checks built on it.

#include <string>
#include <vector>

#include "symorb/group.hpp"

namespace symorb {

double beta_fn(double z, double w);

enum class PhiMethod { Quadrature, Series };

struct PhiResult {
  double theta = 0;
  double alpha = 0;
  double value = 0;
  PhiMethod method = PhiMethod::Quadrature;
  double est_error = 0;
};

PhiResult phi_quadrature(double alpha, double theta);
PhiResult phi_series(double alpha, double theta, int terms = 200);

/// int_0^inf |xi t^p - d|^-alpha - |xi t^p|^-alpha dt, p = 2/(alpha+2).
/// Homogeneous: |d|^{1-alpha/2} |xi|^{-1-alpha/2} Phi(theta), cos theta = <xi/|xi|, d/|d|>.
double s_function(cd xi, cd d, double alpha);

/// Zero of Phi_alpha in (0, pi/2).
double theta_bar(double alpha, double tol = 1e-10);

/// q_i(t) = |t|^{2/(2+alpha)} xi_i for i in the cluster.
struct ParabolicTrajectory {
  Configuration xi{};
  double alpha = 1.0;
  std::vector<int> cluster{0, 1, 2};
};

Configuration parabolic_trajectory_eval(const ParabolicTrajectory& q, double t);

/// Rescales a central configuration so that |t|^p xi solves the equations of motion.
ParabolicTrajectory make_parabolic(Configuration shape, const Masses& m, double alpha, std::vector<int> cluster);
/// max_i |m_i p(p-1) xi_i - grad_i U(xi)|
double parabolic_residual(const ParabolicTrajectory& q, const Masses& m);

struct StandardVariation {
  Configuration delta{};
  double T = 1.0;
  double norm() const;
};

Configuration standard_variation_eval(const StandardVariation& v, double t);

/// Time reflection, reflection across the first axis, sigma = (12).
Configuration g0_act(const Configuration& x);
bool g0_fixed(const Configuration& delta, double tol = 1e-12);

/// 2 |delta|^{1-alpha/2} sum_{i<j} m_i m_j S(xi_i - xi_j, -(delta_i - delta_j)/|delta|)
double delta_action_leading(const ParabolicTrajectory& q, const Configuration& delta, const Masses& m,
                            bool require_g0 = false);

struct NumericGrid {
  double t_min = 1e-16;  // first breakpoint of the geometric mesh
  double ratio = 1.5;    // panel growth factor
};

/// Integral of L(q+v) - L(q) over [-T, T].
double delta_action_numeric(const ParabolicTrajectory& q, const StandardVariation& v, const Masses& m,
                            const NumericGrid& grid = {});

struct VerificationRow {
  std::string check;
  double alpha;
  double x;  // gamma, theta, psi or mu depending on the check
  double value;
  double margin;  // positive when the inequality holds
  bool pass;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool all_pass() const;
  void append(const VerificationReport& o);
};

VerificationReport verify_phi_symmetry(const std::vector<double>& alphas, int theta_points = 17);
VerificationReport verify_phi_monotone(const std::vector<double>& alphas, int theta_points = 64);
/// Phi(2pi/3 + gamma) + Phi(2pi/3 - gamma) < 0
VerificationReport verify_triple_lagrange(const std::vector<double>& alpha_grid,
                                          const std::vector<double>& gamma_grid);
/// Phi(pi/6) + Phi(7pi/6) < 0
VerificationReport verify_pi6(const std::vector<double>& alpha_grid);
/// Both collinear cases over mu and the tilt psi of the collinear line against the fixed axis.
VerificationReport verify_collinear_triple(double alpha, const std::vector<double>& mu_grid, int psi_points = 7);

struct Le2Certificate {
  std::string tail_value;  // exact rational text
  bool tail_ok = false;
  std::string p_at_one;
  bool p_at_one_ok = false;
  std::vector<std::string> shifted_coefficients;  // p(1/2 + u/2) in powers of u
  bool taylor_positive = false;
  bool identity_ok = false;  // p(x) = 4480 (x-1) [truncated sum] at rational sample points
  double cubic_x0 = 0;
  double cubic_min = 0;
  bool cubic_ok = false;
  bool pass() const;
};

Le2Certificate le2_certificate();

VerificationReport le2_rows(const Le2Certificate& c);

std::vector<double> linspace(double a, double b, int n);

/// Everything the verify command runs. extra_alpha is added to each alpha sweep when in (0,2).
VerificationReport verification_suite(double extra_alpha = 0);

std::string verification_csv_header();
std::string verification_csv_row(const VerificationRow& r);

}  // namespace symorb
