#pragma once

// Spectral loops, the rotating-frame action and its gradient, equivariant
// projection, minimization and diagnostics.

#include <cstdint>
#include <limits>
#include <vector>

#include "symorb/group.hpp"

namespace symorb {

struct Loop {
  Masses masses;
  int N = 0;
  std::vector<cd> modes;  // c_{i,n} at i*(2N+1) + n + N

  Loop() = default;
  Loop(const Masses& m, int n) : masses(m), N(n), modes(static_cast<std::size_t>(3 * (2 * n + 1))) {}

  int width() const { return 2 * N + 1; }
  std::size_t index(int i, int n) const { return static_cast<std::size_t>(i * width() + n + N); }
  cd& c(int i, int n) { return modes[index(i, n)]; }
  cd c(int i, int n) const { return modes[index(i, n)]; }

  Configuration eval(double t) const;
  /// d-th time derivative.
  Configuration derivative(double t, int d) const;
};

/// Weighted-COM removal for every mode (Euclidean projection onto sum m_i c_i = 0).
void remove_center_of_mass(std::vector<cd>& c, int N, const Masses& m);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// sum_{i<j} m_i m_j / |x_i - x_j|^alpha, infinite at collisions.
double potential(const Configuration& x, double alpha, const Masses& m);
/// Complex gradient (d/dRe + i d/dIm) of the potential for each body.
Configuration potential_gradient(const Configuration& x, double alpha, const Masses& m);

int default_quad_points(int N);

/// Samples x(t_k), t_k = 2 pi k / Q, using a precomputed phase table.
class LoopSampler {
 public:
  LoopSampler(int N, int Q);
  int Q() const { return Q_; }
  double t(int k) const;
  std::vector<Configuration> sample(const std::vector<cd>& c) const;
  /// Adds (2pi/Q) sum_k g_i(t_k) e^{-J n t_k} to out.
  void accumulate_dual(const std::vector<Configuration>& g, double weight, std::vector<cd>& out) const;

 private:
  int N_, Q_;
  std::vector<cd> phase_;  // e^{J n t_k} at k*(2N+1) + n + N
};

double kinetic_energy_term(const Loop& x, double omega);
double action(const Loop& x, double omega, double alpha, int quad_points = 0);
/// Complex gradient with the center-of-mass constraint projected out.
std::vector<cd> action_gradient(const Loop& x, double omega, double alpha, int quad_points = 0);

/// Group average of (g x)(t) = rho(g) x_{sigma^{-1} i}(tau^{-1} t), then COM removal.
std::vector<cd> equivariant_project(const std::vector<cd>& c, int N, const SymmetryGroup& G, const Masses& m);
Loop equivariant_project(const Loop& x, const SymmetryGroup& G);

/// sum m_i x_i x (xdot_i + omega J x_i) on `samples` uniform times (omega = 0:
/// the rotating-frame quantity).
std::vector<double> angular_momentum(const Loop& x, int samples = 256, double omega = 0.0);

/// max over samples and bodies of |m x'' - 2 m omega J x' - m omega^2 x - grad_i U|.
double newton_residual(const Loop& x, double omega, double alpha, int samples = 512);

double min_pair_distance(const Loop& x, int samples = 1024);

/// ||x - P_H x|| / ||x||, optionally minimized over rotations of the plane
/// applied to x first.
double symmetrization_defect(const Loop& x, const SymmetryGroup& H, bool align_plane_rotation);
/// Root-mean-square distance from the origin, sqrt(mean_t sum m_i |x_i|^2 / sum m_i).
double loop_scale(const Loop& x);

Configuration lagrange_central_config(const Masses& m);
/// Collinear central configuration with body `central` (0-based) in the middle.
Configuration euler_central_config(const Masses& m, int central, double alpha);
double moment_of_inertia(const Configuration& x, const Masses& m);

double lagrange_min_action(double omega, double alpha, const Masses& m);

struct CollisionEvent {
  double t;
  int i, j;
  bool interior;
};

std::vector<CollisionEvent> collision_report(const Loop& x, const SymmetryGroup& G, double threshold,
                                             int samples = 2048);

struct MinimizeOptions {
  int N = 32;
  std::uint64_t seed = 0;
  double tol_grad = 1e-8;
  int max_iter = 4000;
  int restarts = 3;
  int quad_points = 0;
  int history = 12;
};

struct MinimizeResult {
  Loop loop;
  double action = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  double min_pair_distance = 0.0;
  bool converged = false;
};

/// Random equivariant seed, decay 1/(1+n^2), rescaled to the action-optimal size.
Loop random_equivariant_loop(const SymmetryGroup& G, const Masses& m, int N, std::uint64_t seed, double omega,
                             double alpha);

/// Throws NotCoercive. Returns the best iterate with converged=false when
/// the iteration cap is hit.
MinimizeResult minimize(const SymmetryGroup& G, const Masses& m, double omega, double alpha,
                        const MinimizeOptions& opt = {});

}  // namespace symorb
