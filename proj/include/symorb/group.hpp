#pragma once

// Finite subgroups of O(2) x O(2) x S_3 acting on the time circle, the plane
// and the index set {1,2,3}. Group-level arithmetic is exact.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Dense>

#include "symorb/error.hpp"

namespace symorb {

using Rational = boost::rational<std::int64_t>;
using cd = std::complex<double>;

/// Reduce a rational into [0,1).
Rational frac_part(Rational r);

/// Rotation by 2*pi*turn, or reflection across the line at angle pi*turn.
struct O2Elem {
  enum Kind { Rotation, Reflection };
  Kind kind = Rotation;
  Rational turn{0};

  static O2Elem rot(Rational t);
  static O2Elem ref(Rational t);
  static O2Elem identity() { return rot(Rational(0)); }

  bool is_identity() const { return kind == Rotation && turn == Rational(0); }
  int det() const { return kind == Rotation ? 1 : -1; }
  O2Elem inverse() const;
  /// Order of the element (reflections have order 2).
  std::int64_t order() const;

  /// 2x2 real matrix of the map.
  Eigen::Matrix2d matrix() const;
  cd apply(cd z) const;
  /// Action on a time expressed as a fraction u of the circle (t = 2*pi*u).
  Rational apply_time(Rational u) const;

  std::string str() const;
  auto operator<=>(const O2Elem& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    if (turn < o.turn) return std::strong_ordering::less;
    if (o.turn < turn) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const O2Elem& o) const = default;
};

/// a o b: apply b first.
O2Elem compose(const O2Elem& a, const O2Elem& b);

/// Bijection of {0,1,2}; printed 1-based in cycle notation.
struct Perm3 {
  std::array<int, 3> img{0, 1, 2};

  static Perm3 identity() { return Perm3{}; }
  /// Parses "()", "(12)", "(1 2 3)", "(12)(3)".
  static Perm3 parse(const std::string& s);

  int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
  bool is_identity() const { return img[0] == 0 && img[1] == 1 && img[2] == 2; }
  Perm3 inverse() const;
  int order() const;
  std::string str() const;
  auto operator<=>(const Perm3&) const = default;
};

Perm3 compose(const Perm3& a, const Perm3& b);

struct GroupElement {
  O2Elem tau;
  O2Elem rho;
  Perm3 sigma;

  static GroupElement identity() { return {}; }
  bool is_identity() const { return tau.is_identity() && rho.is_identity() && sigma.is_identity(); }
  GroupElement inverse() const;
  std::string str() const;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);

struct Masses {
  std::array<double, 3> m{1.0, 1.0, 1.0};
  double operator[](int i) const { return m[static_cast<std::size_t>(i)]; }
  double total() const { return m[0] + m[1] + m[2]; }
  static Masses unit() { return Masses{}; }
};

/// Planar configuration, one complex number per body.
using Configuration = std::array<cd, 3>;

class SymmetryGroup {
 public:
  SymmetryGroup() : elements_{GroupElement::identity()} {}

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const;
  bool same_elements(const SymmetryGroup& o) const { return elements_ == o.elements_; }

  /// Subgroup of the elements satisfying pred (caller guarantees closure).
  template <class Pred>
  SymmetryGroup filter(Pred pred) const {
    SymmetryGroup h;
    h.elements_.clear();
    for (const auto& g : elements_)
      if (pred(g)) h.elements_.push_back(g);
    h.generators_ = h.elements_;
    return h;
  }

  friend SymmetryGroup generate_closure(const std::vector<GroupElement>& gens, std::size_t cap);

 private:
  std::vector<GroupElement> elements_;  // sorted, identity first
  std::vector<GroupElement> generators_;
};

constexpr std::size_t kDefaultClosureCap = 1024;

SymmetryGroup generate_closure(const std::vector<GroupElement>& gens,
                               std::size_t cap = kDefaultClosureCap);

SymmetryGroup core(const SymmetryGroup& G);

/// Number of distinct time maps, |G / ker tau|.
std::size_t quotient_order(const SymmetryGroup& G);

enum class ActionType { Cyclic, Brake, Dihedral };
ActionType action_type(const SymmetryGroup& G);
std::string action_type_name(ActionType t);

/// Orbits of sigma(G) on {0,1,2}, sorted by decreasing length.
std::vector<std::vector<int>> transitive_decomposition(const SymmetryGroup& G);
/// "1+1+1", "2+1" or "3".
std::string decomposition_string(const SymmetryGroup& G);

/// Elements whose tau fixes the time t = 2*pi*u.
SymmetryGroup time_isotropy(const SymmetryGroup& G, Rational u);

/// Times (as fractions of the circle) fixed by some time reflection of G.
std::vector<Rational> reflection_fixed_times(const SymmetryGroup& G);

struct FundamentalDomain {
  Rational t0, t1;  // fractions of the circle, t = 2*pi*u
  SymmetryGroup H0, H1;
  double t0_radians() const;
  double t1_radians() const;
};

FundamentalDomain fundamental_domain(const SymmetryGroup& G);

/// (g x)_i = rho(g) x_{sigma(g)^{-1}(i)}
Configuration config_action(const GroupElement& g, const Configuration& x);

/// Real 6x6 matrix of config_action on (Re x1, Im x1, Re x2, ...).
Eigen::Matrix<double, 6, 6> config_action_matrix(const GroupElement& g);

/// Throws IncompatibleMasses if some sigma(g) maps i to j with m_i != m_j.
void check_masses(const SymmetryGroup& G, const Masses& m);

/// Columns form an orthonormal real basis of the center-of-mass-zero
/// configurations fixed by every element of H.
Eigen::MatrixXd fixed_config_space(const SymmetryGroup& H, const Masses& m);

/// Loop coefficients c_{i,n}, n in [-N, N], stored at i*(2N+1) + n + N.
std::vector<cd> act_on_modes(const GroupElement& g, const std::vector<cd>& c, int N);

bool is_redundant_element(const GroupElement& g);

struct HypothesisReport {
  bool hh1 = true;  // ker tau ∩ ker rho ∩ ker sigma trivial
  bool hh2 = true;  // heuristic: equivariant values span the plane
  bool hh3 = true;  // no redundant elements
  std::string note;
};

HypothesisReport validate_hypotheses(const SymmetryGroup& G);

/// trivial, line, choreo21, isosceles, hill, choreo3, lagrange, c6, d6, d12,
/// example_bound1, example_bound2, plus lagrange60 and choreo21_10 (the
/// inertial-frame groups whose reductions are lagrange and choreo21).
SymmetryGroup named_group(const std::string& name);
std::vector<std::string> named_group_names();
/// The ten groups of the trivial-core catalog, in table order.
std::vector<std::string> table_group_names();

/// One generator per line: tau=<rot|ref p/q> rho=<rot|ref p/q> sigma=(...)
std::vector<GroupElement> parse_generators(const std::string& text);
GroupElement parse_element(const std::string& line);
std::string format_element(const GroupElement& g);
std::string format_generators(const std::vector<GroupElement>& gens);

}  // namespace symorb
