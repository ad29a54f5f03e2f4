#include "symorb/collision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace symorb {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 2)) throw Error(ErrorKind::DomainError, "alpha must lie in (0,2)");
}

void check_theta(double theta) {
  if (!(theta > 0 && theta < 2 * kPi)) throw Error(ErrorKind::ThetaOutOfRange, "theta must lie in (0,2pi)");
}

double re_dot(cd a, cd b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Wynn epsilon acceleration of a sequence of partial sums.
std::pair<double, double> wynn(const std::vector<double>& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<double>> e(n + 1);
  e[0].assign(n + 1, 0.0);
  e[1] = s;
  double best = s.back(), prev = s.size() > 1 ? s[s.size() - 2] : s.back();
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& a = e[k - 2];
    const auto& b = e[k - 1];
    if (b.size() < 2) break;
    e[k].resize(b.size() - 1);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      double d = b[i + 1] - b[i];
      if (d == 0.0) {
        ok = false;
        break;
      }
      e[k][i] = a[i + 1] + 1.0 / d;
    }
    if (!ok) break;
    // odd k here holds the even columns of the classical table
    if (k % 2 == 1) {
      prev = best;
      best = e[k].back();
    }
  }
  return {best, std::abs(best - prev)};
}

}  // namespace

double beta_fn(double z, double w) {
  if (!(z > 0 && w > 0)) throw Error(ErrorKind::DomainError, "beta needs positive arguments");
  return boost::math::beta(z, w);
}

PhiResult phi_quadrature(double alpha, double theta) {
  check_alpha(alpha);
  check_theta(theta);
  const double a = alpha / 2.0;
  const double c = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  auto D = [&](double u) { return (u - c) * (u - c) + s2; };

  // u = t^{2/(alpha+2)}, inner part [0,1]
  auto f1 = [&](double u) { return std::pow(u, a) * std::pow(D(u), -a); };
  // u = 1/v on [1,inf), with the alpha c v term removed analytically
  auto f2 = [&](double v) {
    if (v <= 0) return 0.0;
    const double y = v - 2.0 * c;
    const double w = v * y;
    double h;  // (D^{-a} - 1 - alpha c v) / v^2
    if (std::abs(w) < 1e-2) {
      // binomial series in w = v y, first-order term folded into -a
      h = -a;
      double coef = -a, vk = 1.0, yk = y;
      for (int k = 2; k < 40; ++k) {
        coef *= (-a - (k - 1)) / k;
        yk *= y;
        if (k > 2) vk *= v;
        double t = coef * vk * yk;
        h += t;
        if (std::abs(t) < 1e-18 * std::abs(h)) break;
      }
    } else {
      h = (std::pow(D(v), -a) - 1.0 - alpha * c * v) / (v * v);
    }
    return std::pow(v, a) * h;
  };

  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0, total_err = 0;
  auto integrate = [&](auto f) {
    double r = 0;
    if (c > 0 && c < 1) {
      r += ts.integrate(f, 0.0, c, 1e-12, &err);
      total_err += err;
      r += ts.integrate(f, c, 1.0, 1e-12, &err);
    } else {
      r += ts.integrate(f, 0.0, 1.0, 1e-12, &err);
    }
    total_err += err;
    return r;
  };
  const double B1 = integrate(f1) - 1.0 / (1.0 - a);
  const double B2 = integrate(f2) + 2.0 * c;
  PhiResult r;
  r.theta = theta;
  r.alpha = alpha;
  r.value = (alpha + 2.0) / 2.0 * (B1 + B2);
  r.method = PhiMethod::Quadrature;
  r.est_error = (alpha + 2.0) / 2.0 * total_err;
  return r;
}

PhiResult phi_series(double alpha, double theta, int terms) {
  check_alpha(alpha);
  check_theta(theta);
  if (terms < 1) throw Error(ErrorKind::DomainError, "terms must be positive");
  const double c = std::cos(theta);
  if (alpha >= 1.0 && c > 1.0 - 1e-12) throw Error(ErrorKind::SeriesDiverges, "cos theta too close to 1");
  const double a = alpha / 2.0;
  const double x = (alpha + 2.0) / 4.0;
  const double pref = alpha * (alpha + 2.0) / 2.0;

  std::vector<double> partial;
  partial.reserve(static_cast<std::size_t>(terms) + 1);
  double sum = beta_fn(x, x) / (alpha - 2.0);
  partial.push_back(pref * sum);
  double last = 0;
  if (c != 0.0) {
    const double lc = std::log(std::abs(c));
    const double lg_a = std::lgamma(a);
    for (int k = 1; k <= terms; ++k) {
      const double y = x + k / 2.0;
      double lt = std::lgamma(a + k) - lg_a - std::lgamma(k + 1.0) + k * (std::numbers::ln2 + lc) +
                  2.0 * std::lgamma(y) - std::lgamma(2.0 * y);
      double t = std::exp(lt) * (alpha + 2.0 * k) / (alpha + 2.0 * k - 2.0);
      if (c < 0 && k % 2 == 1) t = -t;
      last = t / alpha;
      sum += last;
      partial.push_back(pref * sum);
    }
  }
  PhiResult r;
  r.theta = theta;
  r.alpha = alpha;
  r.method = PhiMethod::Series;
  const double ac = std::abs(c);
  if (c < 0 && ac > 0.9 && partial.size() > 8) {
    std::vector<double> tail(partial.end() - std::min<std::ptrdiff_t>(40, static_cast<std::ptrdiff_t>(partial.size())),
                             partial.end());
    auto [v, e] = wynn(tail);
    r.value = v;
    r.est_error = e;
  } else {
    r.value = partial.back();
    r.est_error = ac < 1 ? pref * std::abs(last) * ac / (1.0 - ac) : pref * std::abs(last);
  }
  return r;
}

double s_function(cd xi, cd d, double alpha) {
  const double rx = std::abs(xi);
  if (rx == 0.0) throw Error(ErrorKind::ZeroSeparation, "xi must be nonzero");
  const double rd = std::abs(d);
  if (rd == 0.0) return 0.0;
  double ct = std::clamp(re_dot(xi, d) / (rx * rd), -1.0, 1.0);
  double theta = std::acos(ct);
  if (theta <= 0) throw Error(ErrorKind::ThetaOutOfRange, "variation aligned with the separation");
  return std::pow(rd, 1.0 - alpha / 2.0) * std::pow(rx, -1.0 - alpha / 2.0) * phi_quadrature(alpha, theta).value;
}

double theta_bar(double alpha, double tol) {
  check_alpha(alpha);
  auto f = [&](double th) { return phi_quadrature(alpha, th).value; };
  double lo = 1e-6, hi = kPi;
  if (!(f(lo) > 0 && f(hi) < 0)) throw Error(ErrorKind::RootNotBracketed, "Phi has no sign change on (0,pi)");
  auto stop = [tol](double u, double v) { return std::abs(u - v) <= tol; };
  auto [r0, r1] = boost::math::tools::bisect(f, lo, hi, stop);
  double root = 0.5 * (r0 + r1);
  if (!(root < kPi / 2)) throw Error(ErrorKind::RootNotBracketed, "zero of Phi is not below pi/2");
  return root;
}

Configuration parabolic_trajectory_eval(const ParabolicTrajectory& q, double t) {
  const double s = std::pow(std::abs(t), 2.0 / (2.0 + q.alpha));
  Configuration x{};
  for (int i : q.cluster) x[static_cast<std::size_t>(i)] = s * q.xi[static_cast<std::size_t>(i)];
  return x;
}

namespace {

Configuration cluster_gradient(const Configuration& x, const std::vector<int>& k, double alpha, const Masses& m) {
  Configuration g{};
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b) {
      const auto i = static_cast<std::size_t>(k[a]), j = static_cast<std::size_t>(k[b]);
      cd r = x[i] - x[j];
      double n = std::abs(r);
      if (n == 0.0) throw Error(ErrorKind::ZeroSeparation, "coincident bodies in cluster");
      cd f = -alpha * m[k[a]] * m[k[b]] * std::pow(n, -alpha - 2.0) * r;
      g[i] += f;
      g[j] -= f;
    }
  return g;
}

}  // namespace

ParabolicTrajectory make_parabolic(Configuration shape, const Masses& m, double alpha, std::vector<int> cluster) {
  check_alpha(alpha);
  if (cluster.size() < 2) throw Error(ErrorKind::DomainError, "cluster needs at least two bodies");
  cd com = 0;
  double mt = 0;
  for (int i : cluster) {
    com += m[i] * shape[static_cast<std::size_t>(i)];
    mt += m[i];
  }
  com /= mt;
  Configuration xi{};
  double I = 0;
  for (int i : cluster) {
    xi[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] - com;
    I += m[i] * std::norm(xi[static_cast<std::size_t>(i)]);
  }
  Configuration g = cluster_gradient(xi, cluster, alpha, m);
  double lam = 0;
  for (int i : cluster) lam -= re_dot(g[static_cast<std::size_t>(i)], xi[static_cast<std::size_t>(i)]);
  lam /= I;
  const double p = 2.0 / (alpha + 2.0);
  const double s = std::pow(lam / (p * (1.0 - p)), 1.0 / (alpha + 2.0));
  for (int i : cluster) xi[static_cast<std::size_t>(i)] *= s;
  return {xi, alpha, std::move(cluster)};
}

double parabolic_residual(const ParabolicTrajectory& q, const Masses& m) {
  const double p = 2.0 / (q.alpha + 2.0);
  Configuration g = cluster_gradient(q.xi, q.cluster, q.alpha, m);
  double r = 0;
  for (int i : q.cluster) {
    const auto k = static_cast<std::size_t>(i);
    r = std::max(r, std::abs(m[i] * p * (p - 1.0) * q.xi[k] - g[k]));
  }
  return r;
}

double StandardVariation::norm() const {
  double s = 0;
  for (const auto& z : delta) s += std::norm(z);
  return std::sqrt(s);
}

Configuration standard_variation_eval(const StandardVariation& v, double t) {
  const double n = v.norm();
  const double at = std::abs(t);
  Configuration out{};
  if (n == 0.0 || at >= v.T) return out;
  const double f = at <= v.T - n ? 1.0 : (v.T - at) / n;
  for (std::size_t i = 0; i < 3; ++i) out[i] = f * v.delta[i];
  return out;
}

Configuration g0_act(const Configuration& x) { return {std::conj(x[1]), std::conj(x[0]), std::conj(x[2])}; }

bool g0_fixed(const Configuration& delta, double tol) {
  Configuration g = g0_act(delta);
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(g[i] - delta[i]) > tol) return false;
  return true;
}

double delta_action_leading(const ParabolicTrajectory& q, const Configuration& delta, const Masses& m,
                            bool require_g0) {
  if (require_g0 && !g0_fixed(delta)) throw Error(ErrorKind::NonEquivariantDelta, "delta is not fixed by g0");
  double dn = 0;
  for (int i : q.cluster) dn += std::norm(delta[static_cast<std::size_t>(i)]);
  dn = std::sqrt(dn);
  if (dn == 0.0) return 0.0;
  double s = 0;
  for (std::size_t a = 0; a < q.cluster.size(); ++a)
    for (std::size_t b = a + 1; b < q.cluster.size(); ++b) {
      const int i = q.cluster[a], j = q.cluster[b];
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      // the varied separation is xi t^p + (delta_i - delta_j)
      s += m[i] * m[j] * s_function(q.xi[ui] - q.xi[uj], -(delta[ui] - delta[uj]) / dn, q.alpha);
    }
  return 2.0 * std::pow(dn, 1.0 - q.alpha / 2.0) * s;
}

double delta_action_numeric(const ParabolicTrajectory& q, const StandardVariation& v, const Masses& m,
                            const NumericGrid& grid) {
  const double alpha = q.alpha;
  check_alpha(alpha);
  const double p = 2.0 / (alpha + 2.0);
  const double dn = v.norm();
  if (dn == 0.0) return 0.0;
  const double T = v.T;
  if (!(T > dn)) throw Error(ErrorKind::DomainError, "T must exceed |delta|");

  double xmax = 0;
  for (int i : q.cluster)
    for (int j : q.cluster) xmax = std::max(xmax, std::abs(q.xi[static_cast<std::size_t>(i)] - q.xi[static_cast<std::size_t>(j)]));
  const double t_star = std::pow(dn / xmax, 1.0 / p);
  if (!(grid.ratio > 1.0 && grid.ratio <= 2.0) || !(grid.t_min > 0) || grid.t_min > 1e-3 * t_star ||
      grid.t_min >= T - dn)
    throw Error(ErrorKind::GridTooCoarse, "mesh does not resolve the collision cusp");

  std::vector<double> br{grid.t_min};
  while (br.back() * grid.ratio < T - dn) br.push_back(br.back() * grid.ratio);
  br.push_back(T - dn);
  br.push_back(T);

  using GL = boost::math::quadrature::gauss<double, 20>;
  double pot = 0;
  for (std::size_t a = 0; a < q.cluster.size(); ++a)
    for (std::size_t b = a + 1; b < q.cluster.size(); ++b) {
      const int i = q.cluster[a], j = q.cluster[b];
      const cd xij = q.xi[static_cast<std::size_t>(i)] - q.xi[static_cast<std::size_t>(j)];
      const cd dij = v.delta[static_cast<std::size_t>(i)] - v.delta[static_cast<std::size_t>(j)];
      if (std::abs(dij) == 0.0) continue;
      auto f = [&](double t) {
        double prof = t <= T - dn ? 1.0 : (T - t) / dn;
        return std::pow(std::abs(xij * std::pow(t, p) + prof * dij), -alpha);
      };
      double varied = grid.t_min * std::pow(std::abs(dij), -alpha);
      for (std::size_t k = 0; k + 1 < br.size(); ++k) varied += GL::integrate(f, br[k], br[k + 1]);
      const double base = std::pow(std::abs(xij), -alpha) * std::pow(T, 1.0 - p * alpha) / (1.0 - p * alpha);
      pot += m[i] * m[j] * (varied - base);
    }

  // T^p - (T - |delta|)^p without cancellation
  const double dTp = -std::pow(T, p) * std::expm1(p * std::log1p(-dn / T));
  double kin = 0;
  for (int i : q.cluster) {
    const auto k = static_cast<std::size_t>(i);
    kin += m[i] * std::norm(v.delta[k]) / dn - 2.0 * m[i] * re_dot(q.xi[k], v.delta[k]) / dn * dTp;
  }
  return 2.0 * pot + kin;
}

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

void VerificationReport::append(const VerificationReport& o) { rows.insert(rows.end(), o.rows.begin(), o.rows.end()); }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  if (n == 1) return {a};
  for (int k = 0; k < n; ++k) v.push_back(a + (b - a) * k / (n - 1));
  return v;
}

VerificationReport verify_phi_symmetry(const std::vector<double>& alphas, int theta_points) {
  VerificationReport rep;
  for (double al : alphas)
    for (int k = 1; k <= theta_points; ++k) {
      double th = kPi * k / (theta_points + 1);
      double d = phi_quadrature(al, th).value - phi_quadrature(al, 2 * kPi - th).value;
      rep.rows.push_back({"phi_symmetry", al, th, d, 1e-10 - std::abs(d), std::abs(d) < 1e-10});
    }
  return rep;
}

VerificationReport verify_phi_monotone(const std::vector<double>& alphas, int theta_points) {
  VerificationReport rep;
  for (double al : alphas) {
    double prev = phi_quadrature(al, kPi / (theta_points + 1)).value;
    for (int k = 2; k <= theta_points + 1; ++k) {
      double th = kPi * k / (theta_points + 1);
      double cur = phi_quadrature(al, th).value;
      rep.rows.push_back({"phi_monotone", al, th, cur - prev, prev - cur, cur < prev});
      prev = cur;
    }
  }
  return rep;
}

VerificationReport verify_triple_lagrange(const std::vector<double>& alpha_grid,
                                          const std::vector<double>& gamma_grid) {
  VerificationReport rep;
  for (double al : alpha_grid)
    for (double g : gamma_grid) {
      double v = phi_quadrature(al, 2 * kPi / 3 + g).value + phi_quadrature(al, 2 * kPi / 3 - g).value;
      rep.rows.push_back({"triple_lagrange", al, g, v, -v, v < 0});
    }
  return rep;
}

VerificationReport verify_pi6(const std::vector<double>& alpha_grid) {
  VerificationReport rep;
  for (double al : alpha_grid) {
    double v = phi_quadrature(al, kPi / 6).value + phi_quadrature(al, 7 * kPi / 6).value;
    rep.rows.push_back({"phi_pi6", al, kPi / 6, v, -v, v < 0});
  }
  return rep;
}

namespace {

double pair_sum(const Configuration& xi, const Configuration& delta, double alpha) {
  double dn = 0;
  for (const auto& z : delta) dn += std::norm(z);
  dn = std::sqrt(dn);
  double s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) s += s_function(xi[i] - xi[j], -(delta[i] - delta[j]) / dn, alpha);
  return s;
}

std::string mu_label(const char* prefix, double mu) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_mu%.4g", prefix, mu);
  return buf;
}

}  // namespace

VerificationReport verify_collinear_triple(double alpha, const std::vector<double>& mu_grid, int psi_points) {
  check_alpha(alpha);
  VerificationReport rep;
  for (double mu : mu_grid) {
    if (!(mu >= 0 && mu < 1)) throw Error(ErrorKind::DomainError, "mu must lie in [0,1)");
    for (double psi : linspace(0, kPi / 2, psi_points)) {
      const cd e = std::polar(1.0, psi);
      // second body between the others; third moved along the fixed axis, away from the cluster
      for (int variant = 0; variant < 2; ++variant) {
        Configuration xi{-e, variant == 0 ? -mu * e : mu * e, e};
        Configuration delta{0.0, 0.0, e.real() >= 0 ? 1.0 : -1.0};
        double v = pair_sum(xi, delta, alpha);
        rep.rows.push_back({mu_label(variant == 0 ? "collinear_end_near1" : "collinear_end_near3", mu), alpha, psi, v,
                            -v, v < 0});
      }
      // third body in the middle; outer bodies moved by -delta and +delta orthogonal to the axis
      Configuration xi{-e, e, mu * e};
      const cd d = cd(0, e.imag() >= 0 ? 1.0 : -1.0) / std::sqrt(2.0);
      Configuration delta{-d, d, 0.0};
      double v = pair_sum(xi, delta, alpha);
      rep.rows.push_back({mu_label("collinear_middle", mu), alpha, psi, v, -v, v < 0});
    }
  }
  return rep;
}

namespace {

using boost::multiprecision::cpp_rational;

cpp_rational binom_neg(const cpp_rational& x, int k) {
  // binom(-x, k)
  cpp_rational r = 1;
  for (int j = 0; j < k; ++j) r *= (-x - j) / cpp_rational(j + 1);
  return r;
}

cpp_rational fk(const cpp_rational& x, int k) {
  cpp_rational b = binom_neg(x, k);
  cpp_rational c = 1;  // 4^k (k!)^2 / (2k)!
  for (int j = 1; j <= k; ++j) c *= cpp_rational(4 * j * j, (2 * j - 1) * (2 * j));
  return b * b / (x + k - 1) * c;
}

cpp_rational pow_r(cpp_rational b, int e) {
  cpp_rational r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

const int kPolyCoeffs[] = {1024, -3264, 4596, -756, 1749, 684, 366, 72, 9};

cpp_rational p_eval(const cpp_rational& x) {
  cpp_rational r = 0;
  for (int j = 8; j >= 0; --j) r = r * x + kPolyCoeffs[j];
  return r;
}

std::string str(const cpp_rational& r) { return r.str(); }

}  // namespace

bool Le2Certificate::pass() const { return tail_ok && p_at_one_ok && taylor_positive && identity_ok && cubic_ok; }

Le2Certificate le2_certificate() {
  Le2Certificate c;
  const cpp_rational q34(3, 4);
  cpp_rational tail = fk(1, 5) * pow_r(q34, 5) * 4;
  c.tail_value = str(tail);
  c.tail_ok = tail == cpp_rational(27, 35);

  cpp_rational p1 = p_eval(1);
  c.p_at_one = str(p1);
  c.p_at_one_ok = p1 == 4480;

  // p(1/2 + u/2) = sum_j a_j 2^{-j} (1+u)^j
  std::vector<cpp_rational> b(9, 0);
  for (int j = 0; j <= 8; ++j) {
    cpp_rational w = cpp_rational(kPolyCoeffs[j]) / pow_r(2, j);
    cpp_rational binom = 1;
    for (int i = 0; i <= j; ++i) {
      b[static_cast<std::size_t>(i)] += w * binom;
      binom = binom * (j - i) / (i + 1);
    }
  }
  c.taylor_positive = true;
  for (const auto& v : b) {
    c.shifted_coefficients.push_back(str(v));
    if (!(v > 0)) c.taylor_positive = false;
  }

  c.identity_ok = true;
  for (auto x : {cpp_rational(1, 3), cpp_rational(1, 2), cpp_rational(3, 5), cpp_rational(2, 3), cpp_rational(3, 4),
                 cpp_rational(9, 10), cpp_rational(99, 100), cpp_rational(2)}) {
    cpp_rational lhs = 1 / (x - 1) + cpp_rational(27, 35);
    for (int k = 1; k <= 4; ++k) lhs += fk(x, k) * pow_r(q34, k);
    if (p_eval(x) != 4480 * (x - 1) * lhs) c.identity_ok = false;
  }

  const double x0 = (4.0 - std::sqrt(6.0)) / 3.0;
  auto cubic = [](double x) { return 1.0 - 10.0 / 3.0 * x + 4.0 * x * x - x * x * x; };
  auto dcubic = [](double x) { return -10.0 / 3.0 + 8.0 * x - 3.0 * x * x; };
  c.cubic_x0 = x0;
  c.cubic_min = cubic(x0);
  const double closed = 35.0 / 27.0 - 4.0 / 9.0 * std::sqrt(6.0);
  c.cubic_ok = x0 > 0.5 && x0 < 1.0 && std::abs(dcubic(x0)) < 1e-12 && std::abs(c.cubic_min - closed) < 1e-12 &&
               closed > 0 && cubic(0.5) >= closed && cubic(1.0) >= closed;
  return c;
}

VerificationReport le2_rows(const Le2Certificate& c) {
  VerificationReport rep;
  auto row = [&](const char* name, double x, double value, bool ok) {
    rep.rows.push_back({name, 0.0, x, value, ok ? 1.0 : -1.0, ok});
  };
  row("le2_tail_27_35", 5, 27.0 / 35.0, c.tail_ok);
  row("le2_p_at_1", 1, 4480, c.p_at_one_ok);
  row("le2_shifted_taylor_positive", 0.5, static_cast<double>(c.shifted_coefficients.size()), c.taylor_positive);
  row("le2_polynomial_identity", 0, 0, c.identity_ok);
  row("le2_cubic_min", c.cubic_x0, c.cubic_min, c.cubic_ok);
  return rep;
}

VerificationReport verification_suite(double extra_alpha) {
  auto with_extra = [&](std::vector<double> v) {
    if (extra_alpha > 0 && extra_alpha < 2 && std::find(v.begin(), v.end(), extra_alpha) == v.end())
      v.push_back(extra_alpha);
    return v;
  };
  VerificationReport rep;
  const auto a3 = with_extra({0.5, 1.0, 1.5});
  rep.append(verify_phi_symmetry(a3));
  rep.append(verify_phi_monotone(a3));
  rep.append(verify_pi6(with_extra({0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75})));
  rep.append(verify_triple_lagrange(with_extra(linspace(0.25, 1.75, 21)), linspace(0, kPi / 2, 21)));
  for (double al : a3) rep.append(verify_collinear_triple(al, {0, 0.25, 0.5, 0.75, 0.9}));
  rep.append(le2_rows(le2_certificate()));
  return rep;
}

std::string verification_csv_header() { return "check,alpha,gamma_or_theta,value,margin,pass"; }

std::string verification_csv_row(const VerificationRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%s", r.check.c_str(), r.alpha, r.x, r.value, r.margin,
                r.pass ? "true" : "false");
  return buf;
}

}  // namespace symorb
