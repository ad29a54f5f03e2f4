#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "symorb/loop.hpp"

namespace symorb {

double moment_of_inertia(const Configuration& x, const Masses& m) {
  double I = 0;
  for (int i = 0; i < 3; ++i) I += m[i] * std::norm(x[static_cast<std::size_t>(i)]);
  return I;
}

namespace {

Configuration center_and_normalize(Configuration x, const Masses& m) {
  cd com = 0;
  for (int i = 0; i < 3; ++i) com += m[i] * x[static_cast<std::size_t>(i)];
  com /= m.total();
  for (auto& z : x) z -= com;
  double s = std::sqrt(moment_of_inertia(x, m));
  for (auto& z : x) z /= s;
  return x;
}

}  // namespace

Configuration lagrange_central_config(const Masses& m) {
  for (int i = 0; i < 3; ++i)
    if (!(m[i] > 0)) throw Error(ErrorKind::IncompatibleMasses, "masses must be positive");
  Configuration x{cd(0, 0), cd(1, 0), std::polar(1.0, std::numbers::pi / 3)};
  return center_and_normalize(x, m);
}

Configuration euler_central_config(const Masses& m, int central, double alpha) {
  if (central < 0 || central > 2) throw Error(ErrorKind::DomainError, "central body index out of range");
  for (int i = 0; i < 3; ++i)
    if (!(m[i] > 0)) throw Error(ErrorKind::IncompatibleMasses, "masses must be positive");
  const int a = central == 0 ? 1 : 0;
  const int b = central == 2 ? 1 : 2;
  const double ma = m[a], mb = m[b], mc = m[central];
  // outer bodies at 0 and 1, middle body at r
  auto g = [&](double r) {
    double acc_a = alpha * (mc * std::pow(r, -alpha - 1) + mb);
    double acc_c = alpha * (-ma * std::pow(r, -alpha - 1) + mb * std::pow(1 - r, -alpha - 1));
    double acc_b = -alpha * (ma + mc * std::pow(1 - r, -alpha - 1));
    return (acc_c - acc_a) / r - (acc_b - acc_a);
  };
  double lo = 1e-9, hi = 1 - 1e-9;
  if (!(g(lo) < 0 && g(hi) > 0)) throw Error(ErrorKind::RootNotBracketed, "collinear shape equation");
  std::uintmax_t iters = 200;
  auto tol = [](double u, double v) { return std::abs(u - v) <= 1e-15 * std::max(1.0, std::abs(u)); };
  auto [r0, r1] = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
  double r = 0.5 * (r0 + r1);
  Configuration x{};
  x[static_cast<std::size_t>(a)] = 0.0;
  x[static_cast<std::size_t>(central)] = r;
  x[static_cast<std::size_t>(b)] = 1.0;
  return center_and_normalize(x, m);
}

double lagrange_min_action(double omega, double alpha, const Masses& m) {
  const double k = std::round(omega);
  if (std::abs(omega - k) < 1e-15) throw Error(ErrorKind::OmegaInteger, "omega must not be an integer");
  const double c = (k - omega) * (k - omega);
  const double U0 = potential(lagrange_central_config(m), alpha, m);
  const double Istar = std::pow(alpha * U0 / c, 2.0 / (alpha + 2.0));
  return 2.0 * std::numbers::pi * (0.5 * c * Istar + U0 * std::pow(Istar, -alpha / 2.0));
}

}  // namespace symorb
