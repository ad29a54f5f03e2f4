#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>

#include "symorb/classifier.hpp"
#include "symorb/loop.hpp"

namespace symorb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Vec = std::vector<cd>;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void axpy(double a, const Vec& x, Vec& y) {
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += a * x[k];
}

struct Eval {
  double f = kInfinity;
  double min_dist = 0;
  Vec grad;
};

class Objective {
 public:
  Objective(const SymmetryGroup& G, const Masses& m, double omega, double alpha, int N, int Q)
      : G_(G), m_(m), omega_(omega), alpha_(alpha), N_(N), S_(N, Q) {}

  Eval operator()(const Vec& c, bool with_grad) const {
    Eval e;
    auto xs = S_.sample(c);
    double u = 0, dmin = kInfinity;
    std::vector<Configuration> g(with_grad ? xs.size() : 0);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const auto& x = xs[k];
      dmin = std::min({dmin, std::abs(x[0] - x[1]), std::abs(x[0] - x[2]), std::abs(x[1] - x[2])});
      double v = potential(x, alpha_, m_);
      if (!std::isfinite(v)) return e;
      u += v;
      if (with_grad) g[k] = potential_gradient(x, alpha_, m_);
    }
    Loop L(m_, N_);
    L.modes = c;
    e.f = kinetic_energy_term(L, omega_) + kTwoPi * u / S_.Q();
    e.min_dist = dmin;
    if (with_grad) {
      e.grad.assign(c.size(), 0.0);
      for (int i = 0; i < 3; ++i)
        for (int n = -N_; n <= N_; ++n)
          e.grad[L.index(i, n)] = kTwoPi * m_[i] * (n - omega_) * (n - omega_) * c[L.index(i, n)];
      S_.accumulate_dual(g, 1.0, e.grad);
      e.grad = equivariant_project(e.grad, N_, G_, m_);
    }
    return e;
  }

 private:
  const SymmetryGroup& G_;
  Masses m_;
  double omega_, alpha_;
  int N_;
  LoopSampler S_;
};

struct RunResult {
  Vec c;
  double f = kInfinity;
  double gnorm = kInfinity;
  int iterations = 0;
  bool converged = false;
};

RunResult lbfgs(const Objective& obj, const SymmetryGroup& G, const Masses& m, Vec c, double omega, int N,
                const MinimizeOptions& opt, bool type_r) {
  Vec diag(c.size());
  for (int i = 0; i < 3; ++i)
    for (int n = -N; n <= N; ++n) {
      double w = type_r ? (n - omega) * (n - omega) : n * n + omega * omega;
      diag[static_cast<std::size_t>(i * (2 * N + 1) + n + N)] = kTwoPi * (w + 0.25);
    }
  auto precondition = [&](const Vec& v) {
    Vec r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] / diag[k].real();
    return equivariant_project(r, N, G, m);
  };

  std::deque<std::pair<Vec, Vec>> hist;
  RunResult res;
  Eval cur = obj(c, true);
  if (!std::isfinite(cur.f)) return res;
  double scale = 0;
  for (const auto& z : c) scale += std::norm(z);
  scale = std::sqrt(scale / 3.0);

  int it = 0;
  for (; it < opt.max_iter; ++it) {
    double gn = norm(cur.grad);
    if (gn <= opt.tol_grad) {
      res.converged = true;
      break;
    }
    // two-loop recursion
    Vec q = cur.grad;
    std::vector<double> alphas(hist.size());
    for (std::size_t k = hist.size(); k-- > 0;) {
      const auto& [s, y] = hist[k];
      alphas[k] = dot(s, q) / dot(y, s);
      axpy(-alphas[k], y, q);
    }
    Vec r = precondition(q);
    if (!hist.empty()) {
      const auto& [s, y] = hist.back();
      Vec hy = precondition(y);
      double gamma = dot(s, y) / dot(y, hy);
      for (auto& z : r) z *= gamma;
    }
    for (std::size_t k = 0; k < hist.size(); ++k) {
      const auto& [s, y] = hist[k];
      double beta = dot(y, r) / dot(y, s);
      axpy(alphas[k] - beta, s, r);
    }
    Vec d(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) d[k] = -r[k];
    d = equivariant_project(d, N, G, m);
    double slope = dot(cur.grad, d);
    if (!(slope < 0)) {
      hist.clear();
      d = precondition(cur.grad);
      for (auto& z : d) z = -z;
      slope = dot(cur.grad, d);
    }

    double step = 1.0;
    bool accepted = false;
    Vec trial(c.size());
    Eval next;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(cur.f);
    for (int ls = 0; ls < 50; ++ls) {
      trial = c;
      axpy(step, d, trial);
      next = obj(trial, false);
      if (std::isfinite(next.f) && next.min_dist >= 1e-4 * scale) {
        if (next.f <= cur.f + 1e-4 * step * slope) {
          accepted = true;
          break;
        }
        // below rounding of f, fall back on the gradient norm
        if (next.f <= cur.f + noise) {
          Eval full = obj(trial, true);
          if (norm(full.grad) < gn) {
            next = std::move(full);
            accepted = true;
            break;
          }
        }
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!hist.empty()) {
        hist.clear();
        continue;
      }
      break;
    }
    if (next.grad.empty()) next = obj(trial, true);
    Vec s(c.size()), y(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      s[k] = trial[k] - c[k];
      y[k] = next.grad[k] - cur.grad[k];
    }
    if (dot(s, y) > 1e-14 * norm(s) * norm(y)) {
      hist.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(hist.size()) > opt.history) hist.pop_front();
    }
    c = trial;
    cur = std::move(next);
    scale = 0;
    for (const auto& z : c) scale += std::norm(z);
    scale = std::sqrt(scale / 3.0);
  }
  res.c = c;
  res.f = cur.f;
  res.gnorm = norm(cur.grad);
  res.iterations = it;
  res.converged = res.converged || res.gnorm <= opt.tol_grad;
  return res;
}

}  // namespace

Loop random_equivariant_loop(const SymmetryGroup& G, const Masses& m, int N, std::uint64_t seed, double omega,
                             double alpha) {
  Loop x(m, N);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 3; ++i)
    for (int n = -N; n <= N; ++n) x.c(i, n) = cd(nd(rng), nd(rng)) / (1.0 + n * n);
  x = equivariant_project(x, G);
  if (norm(x.modes) < 1e-12) throw Error(ErrorKind::DomainError, "no nonzero equivariant loops");
  double K = kinetic_energy_term(x, omega);
  double A = action(x, omega, alpha);
  double U = A - K;
  if (K > 0 && std::isfinite(U) && U > 0) {
    double lam = std::pow(alpha * U / (2.0 * K), 1.0 / (2.0 + alpha));
    for (auto& z : x.modes) z *= lam;
  }
  return x;
}

MinimizeResult minimize(const SymmetryGroup& G, const Masses& m, double omega, double alpha,
                        const MinimizeOptions& opt) {
  if (!is_coercive(G, m, omega))
    throw Error(ErrorKind::NotCoercive, "action is not coercive at omega=" + std::to_string(omega));
  const int Q = opt.quad_points > 0 ? opt.quad_points : default_quad_points(opt.N);
  if (Q < default_quad_points(opt.N)) throw Error(ErrorKind::DomainError, "quad_points must be at least 4N+4");
  Objective obj(G, m, omega, alpha, opt.N, Q);
  const bool type_r = is_type_R(G);

  MinimizeResult best;
  best.action = kInfinity;
  int total_iter = 0;
  for (int r = 0; r < std::max(1, opt.restarts); ++r) {
    Loop seed = random_equivariant_loop(G, m, opt.N, opt.seed * 1000003ULL + static_cast<std::uint64_t>(r), omega,
                                        alpha);
    RunResult run = lbfgs(obj, G, m, seed.modes, omega, opt.N, opt, type_r);
    total_iter += run.iterations;
    if (!std::isfinite(run.f)) continue;
    bool better = run.f < best.action - 1e-12 * std::abs(run.f) || (!best.converged && run.converged && run.f <= best.action + 1e-9);
    if (better || !std::isfinite(best.action)) {
      best.loop = Loop(m, opt.N);
      best.loop.modes = run.c;
      best.action = run.f;
      best.gradient_norm = run.gnorm;
      best.converged = run.converged;
    }
  }
  best.iterations = total_iter;
  if (std::isfinite(best.action)) best.min_pair_distance = min_pair_distance(best.loop, 4096);
  return best;
}

}  // namespace symorb
