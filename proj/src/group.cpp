#include "symorb/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <regex>
#include <set>
#include <sstream>

namespace symorb {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ClosureOverflow: return "ClosureOverflow";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::IncompatibleMasses: return "IncompatibleMasses";
    case ErrorKind::NotTypeR: return "NotTypeR";
    case ErrorKind::IrrationalFrame: return "IrrationalFrame";
    case ErrorKind::OmegaInteger: return "OmegaInteger";
    case ErrorKind::CollisionOnGrid: return "CollisionOnGrid";
    case ErrorKind::NotCoercive: return "NotCoercive";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::GeometryViolated: return "GeometryViolated";
    case ErrorKind::DegenerateFrequency: return "DegenerateFrequency";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::SeriesDiverges: return "SeriesDiverges";
    case ErrorKind::ZeroSeparation: return "ZeroSeparation";
    case ErrorKind::NonEquivariantDelta: return "NonEquivariantDelta";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
  }
  return "Error";
}

Rational frac_part(Rational r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return r - Rational(q);
}

namespace {

// e^{2 pi i turn}, exact on quarter turns.
cd cis_turn(Rational turn) {
  Rational t = frac_part(turn);
  if (t == Rational(0)) return {1.0, 0.0};
  if (t == Rational(1, 4)) return {0.0, 1.0};
  if (t == Rational(1, 2)) return {-1.0, 0.0};
  if (t == Rational(3, 4)) return {0.0, -1.0};
  double a = 2.0 * std::numbers::pi * boost::rational_cast<double>(t);
  return {std::cos(a), std::sin(a)};
}

std::string rational_str(Rational r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    std::int64_t d = std::stoll(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), d);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  }
}

}  // namespace

O2Elem O2Elem::rot(Rational t) { return {Rotation, frac_part(t)}; }
O2Elem O2Elem::ref(Rational t) { return {Reflection, frac_part(t)}; }

O2Elem O2Elem::inverse() const { return kind == Rotation ? rot(-turn) : *this; }

std::int64_t O2Elem::order() const { return kind == Reflection ? 2 : turn.denominator(); }

Eigen::Matrix2d O2Elem::matrix() const {
  cd e = cis_turn(turn);
  Eigen::Matrix2d m;
  if (kind == Rotation)
    m << e.real(), -e.imag(), e.imag(), e.real();
  else
    m << e.real(), e.imag(), e.imag(), -e.real();
  return m;
}

cd O2Elem::apply(cd z) const {
  cd e = cis_turn(turn);
  return kind == Rotation ? e * z : e * std::conj(z);
}

Rational O2Elem::apply_time(Rational u) const {
  return kind == Rotation ? frac_part(u + turn) : frac_part(turn - u);
}

std::string O2Elem::str() const { return (kind == Rotation ? "rot " : "ref ") + rational_str(turn); }

O2Elem compose(const O2Elem& a, const O2Elem& b) {
  using K = O2Elem::Kind;
  if (a.kind == K::Rotation && b.kind == K::Rotation) return O2Elem::rot(a.turn + b.turn);
  if (a.kind == K::Rotation) return O2Elem::ref(a.turn + b.turn);
  if (b.kind == K::Rotation) return O2Elem::ref(a.turn - b.turn);
  return O2Elem::rot(a.turn - b.turn);
}

Perm3 Perm3::parse(const std::string& s) {
  Perm3 p;
  std::array<bool, 3> seen{false, false, false};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw Error(ErrorKind::Parse, "empty permutation");
  while (i < s.size()) {
    if (s[i] != '(') throw Error(ErrorKind::Parse, "expected '(' in cycle '" + s + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= s.size()) throw Error(ErrorKind::Parse, "unterminated cycle '" + s + "'");
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (s[i] < '1' || s[i] > '3') throw Error(ErrorKind::Parse, "bad index in cycle '" + s + "'");
      int k = s[i] - '1';
      if (seen[static_cast<std::size_t>(k)]) throw Error(ErrorKind::Parse, "repeated index in '" + s + "'");
      seen[static_cast<std::size_t>(k)] = true;
      cyc.push_back(k);
      ++i;
    }
    for (std::size_t j = 0; j < cyc.size(); ++j)
      p.img[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

Perm3 Perm3::inverse() const {
  Perm3 q;
  for (int i = 0; i < 3; ++i) q.img[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] = i;
  return q;
}

int Perm3::order() const {
  if (is_identity()) return 1;
  int fixed = 0;
  for (int i = 0; i < 3; ++i) fixed += (img[static_cast<std::size_t>(i)] == i);
  return fixed == 1 ? 2 : 3;
}

std::string Perm3::str() const {
  std::string out;
  std::array<bool, 3> done{false, false, false};
  for (int i = 0; i < 3; ++i) {
    if (done[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    out += '(';
    int j = i;
    while (!done[static_cast<std::size_t>(j)]) {
      done[static_cast<std::size_t>(j)] = true;
      out += static_cast<char>('1' + j);
      j = (*this)(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm3 compose(const Perm3& a, const Perm3& b) {
  Perm3 c;
  for (int i = 0; i < 3; ++i) c.img[static_cast<std::size_t>(i)] = a(b(i));
  return c;
}

GroupElement GroupElement::inverse() const { return {tau.inverse(), rho.inverse(), sigma.inverse()}; }

std::string GroupElement::str() const { return format_element(*this); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  return {compose(a.tau, b.tau), compose(a.rho, b.rho), compose(a.sigma, b.sigma)};
}

bool SymmetryGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

SymmetryGroup generate_closure(const std::vector<GroupElement>& gens, std::size_t cap) {
  if (cap < 1) throw Error(ErrorKind::ClosureOverflow, "cap must be positive");
  std::set<GroupElement> found{GroupElement::identity()};
  std::vector<GroupElement> frontier{GroupElement::identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        GroupElement c = compose(a, g);
        if (found.insert(c).second) {
          if (found.size() > cap)
            throw Error(ErrorKind::ClosureOverflow, "group exceeds " + std::to_string(cap) + " elements");
          next.push_back(c);
        }
      }
    }
    frontier.swap(next);
  }
  SymmetryGroup G;
  G.elements_.assign(found.begin(), found.end());
  for (const auto& g : gens)
    if (!g.is_identity() && std::find(G.generators_.begin(), G.generators_.end(), g) == G.generators_.end())
      G.generators_.push_back(g);
  return G;
}

SymmetryGroup core(const SymmetryGroup& G) {
  return G.filter([](const GroupElement& g) { return g.tau.is_identity(); });
}

std::size_t quotient_order(const SymmetryGroup& G) {
  std::set<O2Elem> taus;
  for (const auto& g : G.elements()) taus.insert(g.tau);
  return taus.size();
}

ActionType action_type(const SymmetryGroup& G) {
  bool has_reflection = std::any_of(G.elements().begin(), G.elements().end(),
                                    [](const GroupElement& g) { return g.tau.kind == O2Elem::Reflection; });
  if (!has_reflection) return ActionType::Cyclic;
  return quotient_order(G) == 2 ? ActionType::Brake : ActionType::Dihedral;
}

std::string action_type_name(ActionType t) {
  switch (t) {
    case ActionType::Cyclic: return "cyclic";
    case ActionType::Brake: return "brake";
    case ActionType::Dihedral: return "dihedral";
  }
  return "?";
}

std::vector<std::vector<int>> transitive_decomposition(const SymmetryGroup& G) {
  std::array<int, 3> label{0, 1, 2};
  for (const auto& g : G.elements())
    for (int i = 0; i < 3; ++i) {
      int a = label[static_cast<std::size_t>(i)], b = label[static_cast<std::size_t>(g.sigma(i))];
      if (a == b) continue;
      int lo = std::min(a, b), hi = std::max(a, b);
      for (auto& l : label)
        if (l == hi) l = lo;
    }
  std::map<int, std::vector<int>> orbits;
  for (int i = 0; i < 3; ++i) orbits[label[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [k, v] : orbits) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

std::string decomposition_string(const SymmetryGroup& G) {
  std::string s;
  for (const auto& o : transitive_decomposition(G)) {
    if (!s.empty()) s += "+";
    s += std::to_string(o.size());
  }
  return s;
}

SymmetryGroup time_isotropy(const SymmetryGroup& G, Rational u) {
  Rational v = frac_part(u);
  return G.filter([&](const GroupElement& g) { return g.tau.apply_time(v) == v; });
}

std::vector<Rational> reflection_fixed_times(const SymmetryGroup& G) {
  std::set<Rational> s;
  for (const auto& g : G.elements())
    if (g.tau.kind == O2Elem::Reflection) {
      s.insert(frac_part(g.tau.turn / 2));
      s.insert(frac_part(g.tau.turn / 2 + Rational(1, 2)));
    }
  return {s.begin(), s.end()};
}

double FundamentalDomain::t0_radians() const { return 2.0 * std::numbers::pi * boost::rational_cast<double>(t0); }
double FundamentalDomain::t1_radians() const { return 2.0 * std::numbers::pi * boost::rational_cast<double>(t1); }

FundamentalDomain fundamental_domain(const SymmetryGroup& G) {
  FundamentalDomain fd;
  Rational len(1, static_cast<std::int64_t>(quotient_order(G)));
  if (action_type(G) == ActionType::Cyclic) {
    fd.t0 = 0;
  } else {
    fd.t0 = reflection_fixed_times(G).front();
  }
  fd.t1 = fd.t0 + len;
  fd.H0 = time_isotropy(G, fd.t0);
  fd.H1 = time_isotropy(G, fd.t1);
  return fd;
}

Configuration config_action(const GroupElement& g, const Configuration& x) {
  Configuration y;
  Perm3 inv = g.sigma.inverse();
  for (int i = 0; i < 3; ++i) y[static_cast<std::size_t>(i)] = g.rho.apply(x[static_cast<std::size_t>(inv(i))]);
  return y;
}

Eigen::Matrix<double, 6, 6> config_action_matrix(const GroupElement& g) {
  Eigen::Matrix<double, 6, 6> A = Eigen::Matrix<double, 6, 6>::Zero();
  Eigen::Matrix2d R = g.rho.matrix();
  for (int i = 0; i < 3; ++i) A.block<2, 2>(2 * g.sigma(i), 2 * i) = R;
  return A;
}

void check_masses(const SymmetryGroup& G, const Masses& m) {
  for (int i = 0; i < 3; ++i)
    if (!(m[i] > 0.0)) throw Error(ErrorKind::IncompatibleMasses, "masses must be positive");
  for (const auto& g : G.elements())
    for (int i = 0; i < 3; ++i) {
      double a = m[i], b = m[g.sigma(i)];
      if (std::abs(a - b) > 1e-12 * std::max(a, b))
        throw Error(ErrorKind::IncompatibleMasses, "sigma " + g.sigma.str() + " moves bodies of different mass");
    }
}

namespace {

Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, int cols) {
  if (A.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double tol = 1e-9 * std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > tol) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

}  // namespace

Eigen::MatrixXd fixed_config_space(const SymmetryGroup& H, const Masses& m) {
  check_masses(H, m);
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::MatrixXd A(2 + 6 * static_cast<int>(H.order()), 6);
  A.setZero();
  for (int i = 0; i < 3; ++i) {
    A(0, 2 * i) = m[i];
    A(1, 2 * i + 1) = m[i];
  }
  int r = 2;
  for (const auto& h : H.elements()) {
    A.block<6, 6>(r, 0) = config_action_matrix(h) - Eigen::Matrix<double, 6, 6>::Identity();
    r += 6;
  }
  return null_space(A, 6);
}

std::vector<cd> act_on_modes(const GroupElement& g, const std::vector<cd>& c, int N) {
  const int W = 2 * N + 1;
  std::vector<cd> out(c.size());
  Perm3 inv = g.sigma.inverse();
  const bool time_ref = g.tau.kind == O2Elem::Reflection;
  const bool space_ref = g.rho.kind == O2Elem::Reflection;
  const cd rho_phase = cis_turn(g.rho.turn);
  for (int i = 0; i < 3; ++i) {
    const int src = inv(i);
    for (int m = -N; m <= N; ++m) {
      // space reflection conjugates and reverses the frequency
      int n1 = space_ref ? -m : m;
      // time part: rot p gives e^{-2 pi i n p} c_n, ref p gives e^{-2 pi i n p} c_{-n}
      int n0 = time_ref ? -n1 : n1;
      cd v = c[static_cast<std::size_t>(src * W + n0 + N)] * cis_turn(-g.tau.turn * n1);
      if (space_ref) v = std::conj(v);
      out[static_cast<std::size_t>(i * W + m + N)] = rho_phase * v;
    }
  }
  return out;
}

bool is_redundant_element(const GroupElement& g) {
  return !g.is_identity() && g.tau.kind == O2Elem::Rotation && !g.tau.is_identity() && g.rho.is_identity() &&
         g.sigma.is_identity();
}

HypothesisReport validate_hypotheses(const SymmetryGroup& G) {
  HypothesisReport rep;
  for (const auto& g : G.elements()) {
    if (!g.is_identity() && g.tau.is_identity() && g.rho.is_identity() && g.sigma.is_identity()) rep.hh1 = false;
    if (is_redundant_element(g)) rep.hh3 = false;
  }
  // hh2 heuristic: values of a projected random loop must span the plane.
  Masses m = Masses::unit();
  const int N = 3, W = 2 * N + 1;
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> nd;
  std::vector<cd> c(3 * W);
  for (auto& z : c) z = {nd(rng), nd(rng)};
  std::vector<cd> avg(c.size(), 0.0);
  for (const auto& g : G.elements()) {
    auto gc = act_on_modes(g, c, N);
    for (std::size_t k = 0; k < c.size(); ++k) avg[k] += gc[k];
  }
  for (int n = 0; n < W; ++n) {
    cd s = 0;
    for (int i = 0; i < 3; ++i) s += m[i] * avg[static_cast<std::size_t>(i * W + n)];
    for (int i = 0; i < 3; ++i) avg[static_cast<std::size_t>(i * W + n)] -= s / m.total();
  }
  const int T = 64;
  Eigen::MatrixXd V(2, 3 * T);
  for (int k = 0; k < T; ++k) {
    double t = 2.0 * std::numbers::pi * k / T;
    for (int i = 0; i < 3; ++i) {
      cd x = 0;
      for (int n = -N; n <= N; ++n) x += avg[static_cast<std::size_t>(i * W + n + N)] * std::polar(1.0, n * t);
      V(0, 3 * k + i) = x.real();
      V(1, 3 * k + i) = x.imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
  double s0 = svd.singularValues()(0);
  rep.hh2 = s0 > 1e-9 && svd.singularValues()(1) > 1e-9 * s0;
  rep.note = "hh2 checked on one projected random loop (heuristic)";
  return rep;
}

namespace {

GroupElement el(O2Elem tau, O2Elem rho, const char* sigma) { return {tau, rho, Perm3::parse(sigma)}; }
O2Elem rot(std::int64_t n, std::int64_t d = 1) { return O2Elem::rot(Rational(n, d)); }
O2Elem ref(std::int64_t n, std::int64_t d = 1) { return O2Elem::ref(Rational(n, d)); }

const std::vector<std::pair<std::string, std::vector<GroupElement>>>& catalog() {
  static const std::vector<std::pair<std::string, std::vector<GroupElement>>> cat = {
      {"trivial", {}},
      {"line", {el(ref(0), ref(0), "()")}},
      {"choreo21", {el(rot(1, 2), rot(0), "(12)")}},
      {"isosceles", {el(ref(0), ref(0), "(12)")}},
      {"hill", {el(rot(1, 2), rot(0), "(12)"), el(ref(0), ref(0), "()")}},
      {"choreo3", {el(rot(1, 3), rot(0), "(123)")}},
      {"lagrange", {el(rot(1, 3), rot(0), "(123)"), el(ref(0), ref(0), "(12)")}},
      {"c6", {el(rot(1, 6), ref(0), "(123)")}},
      {"d6", {el(rot(1, 3), rot(0), "(132)"), el(ref(0), rot(1, 2), "(12)")}},
      {"d12", {el(rot(1, 6), ref(0), "(123)"), el(ref(0), rot(1, 2), "(12)")}},
      {"example_bound1", {el(ref(0), rot(0), "(12)")}},
      {"example_bound2",
       {el(rot(0), rot(1, 3), "(123)"), el(rot(0), ref(0), "(12)"), el(rot(1, 2), rot(1, 2), "()")}},
      {"lagrange60", {el(rot(1, 30), rot(1, 10), "(123)"), el(ref(0), ref(0), "(12)")}},
      {"choreo21_10", {el(rot(1, 10), rot(1, 5), "(12)")}},
  };
  return cat;
}

}  // namespace

SymmetryGroup named_group(const std::string& name) {
  for (const auto& [n, gens] : catalog())
    if (n == name) return generate_closure(gens);
  throw Error(ErrorKind::UnknownName, "no group named '" + name + "'");
}

std::vector<std::string> named_group_names() {
  std::vector<std::string> v;
  for (const auto& [n, gens] : catalog()) v.push_back(n);
  return v;
}

std::vector<std::string> table_group_names() {
  return {"trivial", "line", "choreo21", "isosceles", "hill", "choreo3", "lagrange", "c6", "d6", "d12"};
}

GroupElement parse_element(const std::string& line) {
  static const std::regex o2_re(R"((tau|rho)\s*=\s*(rot|ref|id)\b\s*(-?\d+(?:\s*/\s*\d+)?)?)");
  static const std::regex sigma_re(R"(sigma\s*=\s*((?:\([^)]*\)?)+))");
  GroupElement g;
  bool have_tau = false, have_rho = false, have_sigma = false;
  std::string rest = line;
  for (std::sregex_iterator it(line.begin(), line.end(), o2_re), end; it != end; ++it) {
    const auto& m = *it;
    O2Elem e;
    std::string kind = m[2], num = m[3];
    num.erase(std::remove_if(num.begin(), num.end(), ::isspace), num.end());
    if (kind == "id") {
      if (!num.empty()) throw Error(ErrorKind::Parse, "'id' takes no angle");
      e = O2Elem::identity();
    } else {
      if (num.empty()) throw Error(ErrorKind::Parse, "missing turn for " + kind);
      Rational r = parse_rational(num);
      e = kind == "rot" ? O2Elem::rot(r) : O2Elem::ref(r);
    }
    if (m[1] == "tau") {
      if (have_tau) throw Error(ErrorKind::Parse, "duplicate tau");
      g.tau = e;
      have_tau = true;
    } else {
      if (have_rho) throw Error(ErrorKind::Parse, "duplicate rho");
      g.rho = e;
      have_rho = true;
    }
  }
  rest = std::regex_replace(rest, o2_re, " ");
  std::smatch sm;
  if (std::regex_search(rest, sm, sigma_re)) {
    g.sigma = Perm3::parse(sm[1]);
    have_sigma = true;
    rest = std::regex_replace(rest, sigma_re, " ");
  }
  if (!have_tau || !have_rho || !have_sigma)
    throw Error(ErrorKind::Parse, "generator needs tau, rho and sigma: '" + line + "'");
  if (rest.find_first_not_of(" \t\r") != std::string::npos)
    throw Error(ErrorKind::Parse, "unexpected text in '" + line + "'");
  return g;
}

std::vector<GroupElement> parse_generators(const std::string& text) {
  std::vector<GroupElement> gens;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_element(line));
  }
  return gens;
}

std::string format_element(const GroupElement& g) {
  return "tau=" + g.tau.str() + " rho=" + g.rho.str() + " sigma=" + g.sigma.str();
}

std::string format_generators(const std::vector<GroupElement>& gens) {
  std::string s;
  for (const auto& g : gens) s += format_element(g) + "\n";
  return s;
}

}  // namespace symorb
