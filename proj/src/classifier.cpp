#include "symorb/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "symorb/loop.hpp"

namespace symorb {

bool is_type_R(const SymmetryGroup& G) {
  return std::all_of(G.elements().begin(), G.elements().end(),
                     [](const GroupElement& g) { return g.tau.det() == g.rho.det(); });
}

SymmetryGroup redundant_subgroup(const SymmetryGroup& G) {
  std::vector<GroupElement> gens;
  for (const auto& g : G.elements())
    if (is_redundant_element(g)) gens.push_back(g);
  return generate_closure(gens);
}

namespace {

O2Elem conj_first_axis(const O2Elem& e) {
  const O2Elem c = O2Elem::ref(Rational(0));
  return compose(c, compose(e, c));
}

O2Elem scale_time(const O2Elem& tau, Rational k) {
  return tau.kind == O2Elem::Rotation ? O2Elem::rot(tau.turn * k) : O2Elem::ref(tau.turn * k);
}

// rho after the frame change y = e^{-J b t} x (sign = +1) or its inverse (sign = -1).
O2Elem frame_rho(const GroupElement& g, std::int64_t b, int sign) {
  O2Elem shift = O2Elem::rot(-sign * b * g.tau.turn);
  return g.tau.kind == O2Elem::Rotation ? compose(g.rho, shift) : compose(shift, g.rho);
}

// Order of the rotation subgroup of the time quotient.
std::int64_t time_rotation_order(const SymmetryGroup& G) {
  std::int64_t c = 1;
  for (const auto& g : G.elements())
    if (g.tau.kind == O2Elem::Rotation) c = std::lcm(c, g.tau.turn.denominator());
  return c;
}

std::optional<GroupElement> minimal_time_rotation(const SymmetryGroup& G, std::int64_t c) {
  for (const auto& g : G.elements())
    if (g.tau == O2Elem::rot(Rational(1, c)) && g.rho.kind == O2Elem::Rotation) return g;
  return std::nullopt;
}

SymmetryGroup from_set(const std::set<GroupElement>& s, const std::vector<GroupElement>& gens) {
  SymmetryGroup H = generate_closure(gens, 4 * s.size() + 8);
  if (H.order() != s.size() || !std::all_of(s.begin(), s.end(), [&](const auto& g) { return H.contains(g); }))
    throw Error(ErrorKind::IrrationalFrame, "frame change does not yield a group");
  return H;
}

}  // namespace

SymmetryGroup mirror(const SymmetryGroup& G) {
  std::vector<GroupElement> gens;
  for (const auto& g : G.elements()) gens.push_back({g.tau, conj_first_axis(g.rho), g.sigma});
  return generate_closure(gens);
}

FrameReduction rotating_frame_reduce(const SymmetryGroup& G, Rational omega) {
  if (!is_type_R(G)) throw Error(ErrorKind::NotTypeR, "rotating frame reduction needs a type R group");
  const std::int64_t c = time_rotation_order(G);
  if (c == 1) return {G, omega};
  auto g = minimal_time_rotation(G, c);
  if (!g) throw Error(ErrorKind::IrrationalFrame, "no element with minimal time rotation");
  Rational bc = g->rho.turn * c;
  if (bc.denominator() != 1)
    throw Error(ErrorKind::IrrationalFrame, "rho of the minimal time rotation is not a multiple of 1/" +
                                                std::to_string(c));
  std::int64_t b = bc.numerator() % c;
  if (2 * b > c) b -= c;
  if (2 * b <= -c) b += c;
  const std::int64_t s = g->sigma.order();
  if (b == 0 && redundant_subgroup(G).order() == 1) return {G, omega};
  if (c % s != 0) throw Error(ErrorKind::IrrationalFrame, "sigma order does not divide the rotation order");

  const Rational kappa(c / s);
  auto map = [&](const GroupElement& e) {
    return GroupElement{scale_time(e.tau, kappa), frame_rho(e, b, +1), e.sigma};
  };
  std::set<GroupElement> image;
  for (const auto& e : G.elements()) image.insert(map(e));
  std::vector<GroupElement> gens;
  for (const auto& e : G.generators()) gens.push_back(map(e));
  if (image.size() * static_cast<std::size_t>(c) != G.order() * static_cast<std::size_t>(s))
    throw Error(ErrorKind::IrrationalFrame, "quotient by redundant elements has unexpected order");
  SymmetryGroup H = from_set(image, gens);

  Rational w = Rational(s) * (omega - Rational(b)) / Rational(c);
  if (w < Rational(0) && mirror(H).same_elements(H)) w = -w;
  return {H, w};
}

SymmetryGroup rotating_frame_unreduce(const SymmetryGroup& G, Rational omega) {
  if (!is_type_R(G)) throw Error(ErrorKind::NotTypeR, "rotating frame change needs a type R group");
  const std::int64_t c0 = time_rotation_order(G);
  std::int64_t s = 1;
  if (c0 > 1) {
    auto g = minimal_time_rotation(G, c0);
    if (!g) throw Error(ErrorKind::IrrationalFrame, "no element with minimal time rotation");
    s = g->sigma.order();
  }
  Rational w = omega;
  if (w > Rational(0) && mirror(G).same_elements(G)) w = -w;
  Rational q = -w / Rational(s);  // b / c
  if (q == Rational(0)) return G;
  const std::int64_t c = std::lcm(s, q.denominator());
  const std::int64_t b = (q * c).numerator();
  const Rational k(s, c);

  std::vector<GroupElement> gens;
  auto unmap = [&](const GroupElement& e) {
    GroupElement scaled{scale_time(e.tau, k), e.rho, e.sigma};
    scaled.rho = frame_rho(scaled, b, -1);
    return scaled;
  };
  for (const auto& e : G.generators()) gens.push_back(unmap(e));
  // the redundant time shift s/c, seen from the inertial frame
  gens.push_back(GroupElement{O2Elem::rot(k), O2Elem::rot(Rational(b) * k), Perm3::identity()});
  return generate_closure(gens);
}

namespace {

// Real matrix of the action of g on the (n, -n) pair coordinates.
Eigen::MatrixXd pair_action(const GroupElement& g, int n) {
  const int N = std::abs(n);
  const int D = n == 0 ? 6 : 12;
  Eigen::MatrixXd A(D, D);
  auto embed = [&](const Eigen::VectorXd& v) {
    std::vector<cd> c(static_cast<std::size_t>(3 * (2 * N + 1)));
    for (int i = 0; i < 3; ++i) {
      c[static_cast<std::size_t>(i * (2 * N + 1) + n + N)] = {v(2 * i), v(2 * i + 1)};
      if (n != 0) c[static_cast<std::size_t>(i * (2 * N + 1) - n + N)] = {v(6 + 2 * i), v(6 + 2 * i + 1)};
    }
    return c;
  };
  for (int k = 0; k < D; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(D);
    e(k) = 1.0;
    auto out = act_on_modes(g, embed(e), N);
    for (int i = 0; i < 3; ++i) {
      cd a = out[static_cast<std::size_t>(i * (2 * N + 1) + n + N)];
      A(2 * i, k) = a.real();
      A(2 * i + 1, k) = a.imag();
      if (n != 0) {
        cd b = out[static_cast<std::size_t>(i * (2 * N + 1) - n + N)];
        A(6 + 2 * i, k) = b.real();
        A(6 + 2 * i + 1, k) = b.imag();
      }
    }
  }
  return A;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double tol = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k) rank += sv(k) > tol;
  return svd.matrixV().rightCols(A.cols() - rank);
}

}  // namespace

ModeSpace equivariant_mode_space(const SymmetryGroup& G, const Masses& m, int n) {
  check_masses(G, m);
  const int D = n == 0 ? 6 : 12;
  const int blocks = n == 0 ? 1 : 2;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * blocks + D * static_cast<int>(G.order()), D);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < 3; ++i) {
      A(2 * b, 6 * b + 2 * i) = m[i];
      A(2 * b + 1, 6 * b + 2 * i + 1) = m[i];
    }
  int r = 2 * blocks;
  for (const auto& g : G.elements()) {
    A.block(r, 0, D, D) = pair_action(g, n) - Eigen::MatrixXd::Identity(D, D);
    r += D;
  }
  ModeSpace ms;
  ms.n = n;
  ms.basis = nullspace(A);
  if (n == 0) {
    ms.single_mode_dim = ms.dim();
  } else {
    Eigen::MatrixXd B(A.rows() + 6, D);
    B.topRows(A.rows()) = A;
    B.bottomRows(6).setZero();
    B.bottomRows(6).rightCols(6) = Eigen::MatrixXd::Identity(6, 6);
    ms.single_mode_dim = static_cast<int>(nullspace(B).cols());
  }
  return ms;
}

bool CoercivitySet::excludes(std::int64_t n) const {
  if (n == 0) return zero;
  std::int64_t r = ((n % period) + period) % period;
  return std::find(excluded.begin(), excluded.end(), r) != excluded.end();
}

std::string CoercivitySet::str() const {
  const bool zero_in_residues = std::find(excluded.begin(), excluded.end(), 0) != excluded.end();
  std::string res;
  if (!excluded.empty()) {
    res = "omega not in {";
    for (std::size_t k = 0; k < excluded.size(); ++k) {
      if (k) res += ",";
      res += std::to_string(excluded[k]);
    }
    res += "} mod " + std::to_string(period);
  }
  if (!zero || zero_in_residues) return res.empty() ? "all omega" : res;
  return res.empty() ? "omega != 0" : "omega != 0 and " + res;
}

// Nonzero frequencies repeat with the period of the time rotations; n = 0 is
// its own case because there the modes n and -n coincide.
CoercivitySet coercive_set(const SymmetryGroup& G, const Masses& m) {
  CoercivitySet cs;
  for (const auto& g : G.elements()) cs.period = std::lcm(cs.period, g.tau.turn.denominator());
  cs.zero = equivariant_mode_space(G, m, 0).single_mode_dim > 0;
  for (std::int64_t r = 0; r < cs.period; ++r) {
    const int n = static_cast<int>(r == 0 ? cs.period : r);
    if (equivariant_mode_space(G, m, n).single_mode_dim > 0) cs.excluded.push_back(r);
  }
  return cs;
}

bool is_coercive(const SymmetryGroup& G, const Masses& m, double omega) {
  double n = std::round(omega);
  if (std::abs(omega - n) > 1e-12) {
    check_masses(G, m);
    return true;
  }
  return !coercive_set(G, m).excludes(static_cast<std::int64_t>(n));
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::Refuted: return "refuted";
    case Verdict::Suspected: return "suspected";
  }
  return "?";
}

std::vector<SymmetryGroup> time_isotropy_subgroups(const SymmetryGroup& G) {
  std::vector<SymmetryGroup> out{core(G)};
  for (const auto& u : reflection_fixed_times(G)) {
    SymmetryGroup H = time_isotropy(G, u);
    if (std::none_of(out.begin(), out.end(), [&](const SymmetryGroup& K) { return K.same_elements(H); }))
      out.push_back(H);
  }
  return out;
}

namespace {

std::string rational_text(Rational r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

// Smallest pair distance of a loop, with golden-section refinement around
// the grid minima.
double refined_min_distance(const Loop& x, int samples) {
  auto pair_dist = [&](double t, int i, int j) {
    Configuration c = x.eval(t);
    return std::abs(c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)]);
  };
  const double h = 2.0 * M_PI / samples;
  double best = kInfinity;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<double> d(static_cast<std::size_t>(samples));
      for (int k = 0; k < samples; ++k) d[static_cast<std::size_t>(k)] = pair_dist(k * h, i, j);
      for (int k = 0; k < samples; ++k) {
        double prev = d[static_cast<std::size_t>((k + samples - 1) % samples)];
        double next = d[static_cast<std::size_t>((k + 1) % samples)];
        double cur = d[static_cast<std::size_t>(k)];
        best = std::min(best, cur);
        if (cur > prev || cur > next) continue;
        double a = (k - 1) * h, b = (k + 1) * h;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = pair_dist(c1, i, j), f2 = pair_dist(c2, i, j);
        for (int it = 0; it < 60; ++it) {
          if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = pair_dist(c1, i, j);
          } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = pair_dist(c2, i, j);
          }
        }
        best = std::min({best, f1, f2});
      }
    }
  return best;
}

double norm(const std::vector<cd>& c) {
  double s = 0;
  for (const auto& z : c) s += std::norm(z);
  return std::sqrt(s);
}

// Penalty descent on sum_t sum_pairs |x_i - x_j|^{-2} over unit-norm equivariant loops.
Loop penalty_descent(const SymmetryGroup& G, const Masses& m, std::uint64_t seed) {
  const int N = 4, Q = 64;
  Loop x(m, N);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 3; ++i)
    for (int n = -N; n <= N; ++n) x.c(i, n) = cd(nd(rng), nd(rng)) / (1.0 + n * n);
  x.modes = equivariant_project(x.modes, N, G, m);
  double nrm = norm(x.modes);
  if (nrm < 1e-12) return x;
  for (auto& z : x.modes) z /= nrm;

  LoopSampler S(N, Q);
  auto penalty = [&](const std::vector<cd>& c, std::vector<cd>* grad) {
    auto xs = S.sample(c);
    double p = 0;
    std::vector<Configuration> g(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      double u = potential(xs[k], 2.0, Masses::unit());
      if (!std::isfinite(u)) return kInfinity;
      p += u;
      if (grad) g[k] = potential_gradient(xs[k], 2.0, Masses::unit());
    }
    if (grad) {
      grad->assign(c.size(), 0.0);
      S.accumulate_dual(g, 1.0, *grad);
    }
    return p * 2.0 * M_PI / Q;
  };
  std::vector<cd> grad;
  double p = penalty(x.modes, &grad);
  double step = 1e-2;
  for (int it = 0; it < 150 && std::isfinite(p); ++it) {
    grad = equivariant_project(grad, N, G, m);
    // tangent to the unit sphere
    cd dot = 0;
    for (std::size_t k = 0; k < grad.size(); ++k) dot += std::conj(x.modes[k]) * grad[k];
    for (std::size_t k = 0; k < grad.size(); ++k) grad[k] -= dot.real() * x.modes[k];
    double gn = norm(grad);
    if (gn < 1e-10) break;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls) {
      std::vector<cd> trial(x.modes.size());
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] = x.modes[k] - step * grad[k] / gn;
      double tn = norm(trial);
      for (auto& z : trial) z /= tn;
      double pt = penalty(trial, nullptr);
      if (pt < p) {
        x.modes = trial;
        p = penalty(x.modes, &grad);
        step *= 1.5;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return x;
}

}  // namespace

CollisionVerdict is_bound_to_collisions(const SymmetryGroup& G, const Masses& m, int seeds) {
  check_masses(G, m);
  CollisionVerdict v;
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& H : time_isotropy_subgroups(G)) {
    Eigen::MatrixXd B = fixed_config_space(H, m);
    std::string where = H.order() == core(G).order() && H.same_elements(core(G)) ? "every time"
                                                                                : "an isotropy time";
    if (B.cols() == 0) {
      v.verdict = Verdict::Proved;
      v.evidence = "fixed configurations at " + where + " reduce to the total collision";
      return v;
    }
    for (const auto& pr : pairs) {
      Eigen::MatrixXd D = B.row(2 * pr[0]) - B.row(2 * pr[1]);
      Eigen::MatrixXd E = B.row(2 * pr[0] + 1) - B.row(2 * pr[1] + 1);
      if (D.norm() + E.norm() < 1e-10) {
        v.verdict = Verdict::Proved;
        v.evidence = "fixed configurations at " + where + " lie in the collision set of bodies " +
                     std::to_string(pr[0] + 1) + "," + std::to_string(pr[1] + 1);
        return v;
      }
    }
  }
  Eigen::MatrixXd K = fixed_config_space(core(G), m);
  if (K.cols() == 1) {
    Eigen::VectorXd xi = K.col(0);
    for (const auto& g : G.elements()) {
      if (g.tau.kind != O2Elem::Rotation || g.tau.is_identity()) continue;
      Eigen::VectorXd gx = config_action_matrix(g) * xi;
      if ((gx + xi).norm() < 1e-10) {
        v.verdict = Verdict::Proved;
        v.evidence = "one-dimensional core-fixed space reversed by the time shift " + rational_text(g.tau.turn);
        return v;
      }
    }
  }
  double best = 0.0;
  for (int s = 0; s < seeds; ++s) {
    Loop x = penalty_descent(G, m, 1000 + static_cast<std::uint64_t>(s));
    if (norm(x.modes) < 1e-12) {
      v.verdict = Verdict::Proved;
      v.evidence = "no nonzero equivariant loops";
      return v;
    }
    best = std::max(best, refined_min_distance(x, 512));
    if (best >= 1e-3) break;
  }
  v.best_min_distance = best;
  if (best >= 1e-3) {
    v.verdict = Verdict::Refuted;
    v.evidence = "equivariant loop with min pair distance " + std::to_string(best) + " at unit norm";
  } else {
    v.verdict = Verdict::Suspected;
    v.evidence = "no collisionless equivariant loop found";
  }
  return v;
}

bool is_homographic(const SymmetryGroup& G, const Masses& m) {
  Eigen::MatrixXd B = fixed_config_space(core(G), m);
  if (B.cols() <= 1) return true;
  if (B.cols() > 2) return false;
  Eigen::MatrixXd JB(6, 2);
  for (int i = 0; i < 3; ++i) {
    JB.row(2 * i) = -B.row(2 * i + 1);
    JB.row(2 * i + 1) = B.row(2 * i);
  }
  return (JB - B * (B.transpose() * JB)).norm() < 1e-10;
}

bool subgroup_has_rcp(const SymmetryGroup& K) {
  for (const auto& g : K.elements())
    if (g.rho.det() != 1) return false;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2) {
      bool ok = std::all_of(K.elements().begin(), K.elements().end(), [&](const GroupElement& g) {
        return !(g.sigma(i1) == i1 || g.sigma(i2) == i2) || g.rho.is_identity();
      });
      if (ok) return true;
    }
  return false;
}

bool has_rcp(const SymmetryGroup& G) {
  auto subs = time_isotropy_subgroups(G);
  return std::all_of(subs.begin(), subs.end(), [](const SymmetryGroup& K) { return subgroup_has_rcp(K); });
}

namespace {

// Homographic global minimizer column: known values, not computed.
std::optional<bool> expected_hgm(const std::string& name) {
  static const std::map<std::string, bool> hgm = {
      {"trivial", true}, {"line", false},    {"choreo21", false}, {"isosceles", true}, {"hill", false},
      {"choreo3", true}, {"lagrange", true}, {"c6", false},       {"d6", false},       {"d12", false}};
  auto it = hgm.find(name);
  if (it == hgm.end()) return std::nullopt;
  return it->second;
}

}  // namespace

ClassificationReport classify(const SymmetryGroup& G, const Masses& m, const std::string& name) {
  check_masses(G, m);
  ClassificationReport r;
  r.name = name;
  r.order = G.order();
  r.type_R = is_type_R(G);
  r.action = action_type(G);
  r.decomposition = decomposition_string(G);
  r.core_order = core(G).order();
  r.redundant = redundant_subgroup(G).order() > 1;
  r.coercive_at = coercive_set(G, m);
  r.bound_to_collisions = is_bound_to_collisions(G, m);
  r.homographic = is_homographic(G, m);
  r.fully_uncoercive = !r.type_R && r.coercive_at.excludes(0);
  r.rcp = has_rcp(G);
  r.hgm = expected_hgm(name);
  return r;
}

std::vector<ClassificationReport> build_table() {
  std::vector<ClassificationReport> rows;
  for (const auto& name : table_group_names()) rows.push_back(classify(named_group(name), Masses::unit(), name));
  return rows;
}

namespace {
const char* yn(bool b) { return b ? "yes" : "no"; }
}  // namespace

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << "name=" << r.name << "\n";
  os << "order=" << r.order << "\n"
     << "type_R=" << yn(r.type_R) << "\n"
     << "action_type=" << action_type_name(r.action) << "\n"
     << "decomposition=" << r.decomposition << "\n"
     << "core_order=" << r.core_order << "\n"
     << "redundant=" << yn(r.redundant) << "\n"
     << "coercive_at=" << r.coercive_at.str() << "\n"
     << "bound_to_collisions=" << verdict_name(r.bound_to_collisions.verdict) << "\n"
     << "collision_evidence=" << r.bound_to_collisions.evidence << "\n"
     << "homographic=" << yn(r.homographic) << "\n"
     << "fully_uncoercive=" << yn(r.fully_uncoercive) << "\n"
     << "rcp=" << yn(r.rcp) << "\n";
  if (r.hgm) os << "hgm=" << yn(*r.hgm) << "\n";
  return os.str();
}

std::string report_csv_header() {
  return "name,order,type_R,action_type,decomposition,rcp,hgm,core_order,redundant,coercive_at,"
         "bound_to_collisions,homographic,fully_uncoercive";
}

std::string report_to_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.name << "," << r.order << "," << yn(r.type_R) << "," << action_type_name(r.action) << ","
     << r.decomposition << "," << yn(r.rcp) << "," << (r.hgm ? yn(*r.hgm) : "") << "," << r.core_order << ","
     << yn(r.redundant) << ",\"" << r.coercive_at.str() << "\"," << verdict_name(r.bound_to_collisions.verdict)
     << "," << yn(r.homographic) << "," << yn(r.fully_uncoercive);
  return os.str();
}

}  // namespace symorb
