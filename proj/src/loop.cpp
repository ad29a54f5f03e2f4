#include "symorb/loop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symorb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cd kJ{0.0, 1.0};
}  // namespace

Configuration Loop::eval(double t) const { return derivative(t, 0); }

Configuration Loop::derivative(double t, int d) const {
  Configuration x{};
  for (int n = -N; n <= N; ++n) {
    cd e = std::polar(1.0, n * t);
    for (int k = 0; k < d; ++k) e *= cd(0.0, n);
    for (int i = 0; i < 3; ++i) x[static_cast<std::size_t>(i)] += c(i, n) * e;
  }
  return x;
}

void remove_center_of_mass(std::vector<cd>& c, int N, const Masses& m) {
  const int W = 2 * N + 1;
  const double m2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
  for (int n = 0; n < W; ++n) {
    cd s = 0;
    for (int i = 0; i < 3; ++i) s += m[i] * c[static_cast<std::size_t>(i * W + n)];
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i * W + n)] -= m[i] * s / m2;
  }
}

double potential(const Configuration& x, double alpha, const Masses& m) {
  double u = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double r = std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
      if (r == 0.0) return kInfinity;
      u += m[i] * m[j] * std::pow(r, -alpha);
    }
  return u;
}

Configuration potential_gradient(const Configuration& x, double alpha, const Masses& m) {
  Configuration g{};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      cd d = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      double r = std::abs(d);
      cd f = -alpha * m[i] * m[j] * d * std::pow(r, -alpha - 2.0);
      g[static_cast<std::size_t>(i)] += f;
      g[static_cast<std::size_t>(j)] -= f;
    }
  return g;
}

int default_quad_points(int N) { return 4 * N + 4; }

LoopSampler::LoopSampler(int N, int Q) : N_(N), Q_(Q), phase_(static_cast<std::size_t>(Q * (2 * N + 1))) {
  for (int k = 0; k < Q; ++k)
    for (int n = -N; n <= N; ++n) phase_[static_cast<std::size_t>(k * (2 * N + 1) + n + N)] = std::polar(1.0, n * t(k));
}

double LoopSampler::t(int k) const { return kTwoPi * k / Q_; }

std::vector<Configuration> LoopSampler::sample(const std::vector<cd>& c) const {
  const int W = 2 * N_ + 1;
  std::vector<Configuration> xs(static_cast<std::size_t>(Q_));
  for (int k = 0; k < Q_; ++k) {
    const cd* ph = &phase_[static_cast<std::size_t>(k * W)];
    for (int i = 0; i < 3; ++i) {
      const cd* ci = &c[static_cast<std::size_t>(i * W)];
      cd s = 0;
      for (int n = 0; n < W; ++n) s += ci[n] * ph[n];
      xs[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = s;
    }
  }
  return xs;
}

void LoopSampler::accumulate_dual(const std::vector<Configuration>& g, double weight, std::vector<cd>& out) const {
  const int W = 2 * N_ + 1;
  const double w = weight * kTwoPi / Q_;
  for (int k = 0; k < Q_; ++k) {
    const cd* ph = &phase_[static_cast<std::size_t>(k * W)];
    for (int i = 0; i < 3; ++i) {
      cd gi = w * g[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      cd* oi = &out[static_cast<std::size_t>(i * W)];
      for (int n = 0; n < W; ++n) oi[n] += gi * std::conj(ph[n]);
    }
  }
}

double kinetic_energy_term(const Loop& x, double omega) {
  double k = 0;
  for (int i = 0; i < 3; ++i)
    for (int n = -x.N; n <= x.N; ++n) k += 0.5 * x.masses[i] * (n - omega) * (n - omega) * std::norm(x.c(i, n));
  return kTwoPi * k;
}

double action(const Loop& x, double omega, double alpha, int quad_points) {
  const int Q = quad_points > 0 ? quad_points : default_quad_points(x.N);
  LoopSampler S(x.N, Q);
  double u = 0;
  for (const auto& c : S.sample(x.modes)) {
    double v = potential(c, alpha, x.masses);
    if (!std::isfinite(v)) return kInfinity;
    u += v;
  }
  return kinetic_energy_term(x, omega) + kTwoPi * u / Q;
}

std::vector<cd> action_gradient(const Loop& x, double omega, double alpha, int quad_points) {
  const int Q = quad_points > 0 ? quad_points : default_quad_points(x.N);
  LoopSampler S(x.N, Q);
  auto xs = S.sample(x.modes);
  std::vector<Configuration> g(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!std::isfinite(potential(xs[k], alpha, x.masses)))
      throw Error(ErrorKind::CollisionOnGrid, "collision at grid time " + std::to_string(S.t(static_cast<int>(k))));
    g[k] = potential_gradient(xs[k], alpha, x.masses);
  }
  std::vector<cd> grad(x.modes.size());
  for (int i = 0; i < 3; ++i)
    for (int n = -x.N; n <= x.N; ++n)
      grad[x.index(i, n)] = kTwoPi * x.masses[i] * (n - omega) * (n - omega) * x.c(i, n);
  S.accumulate_dual(g, 1.0, grad);
  remove_center_of_mass(grad, x.N, x.masses);
  return grad;
}

std::vector<cd> equivariant_project(const std::vector<cd>& c, int N, const SymmetryGroup& G, const Masses& m) {
  check_masses(G, m);
  std::vector<cd> avg(c.size(), 0.0);
  for (const auto& g : G.elements()) {
    auto gc = act_on_modes(g, c, N);
    for (std::size_t k = 0; k < c.size(); ++k) avg[k] += gc[k];
  }
  const double inv = 1.0 / static_cast<double>(G.order());
  for (auto& z : avg) z *= inv;
  remove_center_of_mass(avg, N, m);
  return avg;
}

Loop equivariant_project(const Loop& x, const SymmetryGroup& G) {
  Loop y = x;
  y.modes = equivariant_project(x.modes, x.N, G, x.masses);
  return y;
}

std::vector<double> angular_momentum(const Loop& x, int samples, double omega) {
  std::vector<double> J(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    double t = kTwoPi * k / samples;
    Configuration p = x.eval(t), v = x.derivative(t, 1);
    double s = 0;
    for (int i = 0; i < 3; ++i) {
      auto ii = static_cast<std::size_t>(i);
      s += x.masses[i] * std::imag(std::conj(p[ii]) * (v[ii] + omega * kJ * p[ii]));
    }
    J[static_cast<std::size_t>(k)] = s;
  }
  return J;
}

double newton_residual(const Loop& x, double omega, double alpha, int samples) {
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    double t = kTwoPi * k / samples;
    Configuration p = x.eval(t), v = x.derivative(t, 1), a = x.derivative(t, 2);
    if (!std::isfinite(potential(p, alpha, x.masses)))
      throw Error(ErrorKind::CollisionOnGrid, "collision at t=" + std::to_string(t));
    Configuration g = potential_gradient(p, alpha, x.masses);
    for (int i = 0; i < 3; ++i) {
      auto ii = static_cast<std::size_t>(i);
      double m = x.masses[i];
      cd r = m * a[ii] - 2.0 * m * omega * kJ * v[ii] - m * omega * omega * p[ii] - g[ii];
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double min_pair_distance(const Loop& x, int samples) {
  LoopSampler S(x.N, samples);
  double best = kInfinity;
  for (const auto& c : S.sample(x.modes))
    best = std::min({best, std::abs(c[0] - c[1]), std::abs(c[0] - c[2]), std::abs(c[1] - c[2])});
  return best;
}

double loop_scale(const Loop& x) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int n = -x.N; n <= x.N; ++n) s += x.masses[i] * std::norm(x.c(i, n));
  return std::sqrt(s / x.masses.total());
}

namespace {

double modes_norm(const std::vector<cd>& c) {
  double s = 0;
  for (const auto& z : c) s += std::norm(z);
  return std::sqrt(s);
}

double defect_at(const Loop& x, const SymmetryGroup& H, double theta) {
  std::vector<cd> r = x.modes;
  const cd e = std::polar(1.0, theta);
  for (auto& z : r) z *= e;
  auto p = equivariant_project(r, x.N, H, x.masses);
  double d = 0;
  for (std::size_t k = 0; k < r.size(); ++k) d += std::norm(r[k] - p[k]);
  return std::sqrt(d);
}

}  // namespace

double symmetrization_defect(const Loop& x, const SymmetryGroup& H, bool align_plane_rotation) {
  const double nx = modes_norm(x.modes);
  if (nx == 0.0) return 0.0;
  if (!align_plane_rotation) return defect_at(x, H, 0.0) / nx;
  const int grid = 360;
  double best_theta = 0, best = kInfinity;
  for (int k = 0; k < grid; ++k) {
    double th = kTwoPi * k / grid;
    double d = defect_at(x, H, th);
    if (d < best) {
      best = d;
      best_theta = th;
    }
  }
  double a = best_theta - kTwoPi / grid, b = best_theta + kTwoPi / grid;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = defect_at(x, H, c1), f2 = defect_at(x, H, c2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = defect_at(x, H, c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = defect_at(x, H, c2);
    }
  }
  return std::min({best, f1, f2}) / nx;
}

std::vector<CollisionEvent> collision_report(const Loop& x, const SymmetryGroup& G, double threshold, int samples) {
  FundamentalDomain fd = fundamental_domain(G);
  std::vector<double> boundary;
  for (const auto& g : G.elements())
    for (Rational u : {fd.t0, fd.t1}) boundary.push_back(kTwoPi * boost::rational_cast<double>(g.tau.apply_time(u)));
  auto on_boundary = [&](double t) {
    for (double b : boundary) {
      double d = std::fmod(std::abs(t - b), kTwoPi);
      if (std::min(d, kTwoPi - d) < 1e-5) return true;
    }
    return false;
  };
  auto dist = [&](double t, int i, int j) {
    Configuration c = x.eval(t);
    return std::abs(c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)]);
  };
  std::vector<CollisionEvent> out;
  const double h = kTwoPi / samples;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<double> d(static_cast<std::size_t>(samples));
      for (int k = 0; k < samples; ++k) d[static_cast<std::size_t>(k)] = dist(k * h, i, j);
      for (int k = 0; k < samples; ++k) {
        double prev = d[static_cast<std::size_t>((k + samples - 1) % samples)];
        double next = d[static_cast<std::size_t>((k + 1) % samples)];
        double cur = d[static_cast<std::size_t>(k)];
        if (cur > prev || cur >= next) continue;
        double a = (k - 1) * h, b = (k + 1) * h;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = dist(c1, i, j), f2 = dist(c2, i, j);
        for (int it = 0; it < 80; ++it) {
          if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = dist(c1, i, j);
          } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = dist(c2, i, j);
          }
        }
        double t = f1 < f2 ? c1 : c2;
        if (std::min({f1, f2, cur}) >= threshold) continue;
        if (std::min(f1, f2) > cur) t = k * h;
        t = std::fmod(t + kTwoPi, kTwoPi);
        out.push_back({t, i, j, !on_boundary(t)});
      }
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  return out;
}

}  // namespace symorb
