#include <cmath>
#include <numbers>

#include "doctest.h"
#include "symorb/group.hpp"

using namespace symorb;

namespace {

Eigen::Matrix2d numeric_matrix(bool reflection, double turn) {
  Eigen::Matrix2d m;
  if (!reflection) {
    double a = 2 * std::numbers::pi * turn;
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  } else {
    double a = 2 * std::numbers::pi * turn;
    m << std::cos(a), std::sin(a), std::sin(a), -std::cos(a);
  }
  return m;
}

}  // namespace

TEST_SUITE("symmetry_group") {
  TEST_CASE("o2 composition") {
    CHECK(compose(O2Elem::rot(Rational(1, 3)), O2Elem::rot(Rational(1, 3))) == O2Elem::rot(Rational(2, 3)));
    CHECK(compose(O2Elem::ref(Rational(0)), O2Elem::ref(Rational(0))).is_identity());

    // oracle: multiply the 2x2 matrices and read off kind and angle
    Eigen::Matrix2d prod = numeric_matrix(true, 0.0) * numeric_matrix(false, 1.0 / 3);
    CHECK(prod.determinant() == doctest::Approx(-1.0));
    double line = std::atan2(prod(1, 0), prod(0, 0)) / 2;  // angle of the mirror line
    double turn = line / std::numbers::pi;
    if (turn < 0) turn += 1;
    O2Elem r = compose(O2Elem::ref(Rational(0)), O2Elem::rot(Rational(1, 3)));
    CHECK(r.kind == O2Elem::Reflection);
    CHECK(boost::rational_cast<double>(r.turn) == doctest::Approx(turn).epsilon(1e-12));
    CHECK((r.matrix() - prod).norm() < 1e-12);
  }

  TEST_CASE("composition matches matrices exhaustively on a grid") {
    for (int ka = 0; ka < 2; ++ka)
      for (int kb = 0; kb < 2; ++kb)
        for (int a = 0; a < 12; ++a)
          for (int b = 0; b < 12; ++b) {
            O2Elem x = ka ? O2Elem::ref(Rational(a, 12)) : O2Elem::rot(Rational(a, 12));
            O2Elem y = kb ? O2Elem::ref(Rational(b, 12)) : O2Elem::rot(Rational(b, 12));
            Eigen::Matrix2d want = numeric_matrix(ka, a / 12.0) * numeric_matrix(kb, b / 12.0);
            CHECK((compose(x, y).matrix() - want).norm() < 1e-12);
          }
  }

  TEST_CASE("closure orders") {
    CHECK(generate_closure({}).order() == 1);
    CHECK(named_group("lagrange").order() == 6);
    CHECK(named_group("d12").order() == 12);
    CHECK(named_group("trivial").order() == 1);
    CHECK(named_group("hill").order() == 4);
    GroupElement g;
    g.tau = O2Elem::rot(Rational(1, 7));
    g.rho = O2Elem::rot(Rational(1, 11));
    CHECK_THROWS_AS(generate_closure({g}, 20), Error);
    try {
      generate_closure({g}, 20);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ClosureOverflow);
    }
    CHECK_THROWS_AS(named_group("nope"), Error);
  }

  TEST_CASE("group axioms for every named group") {
    for (const auto& name : named_group_names()) {
      SymmetryGroup G = named_group(name);
      CAPTURE(name);
      bool has_identity = false;
      for (const auto& a : G.elements()) {
        has_identity = has_identity || a.is_identity();
        CHECK(G.contains(a.inverse()));
        for (const auto& b : G.elements()) {
          GroupElement ab = compose(a, b);
          CHECK(G.contains(ab));
          CHECK(ab.tau.det() == a.tau.det() * b.tau.det());
          CHECK(ab.rho.det() == a.rho.det() * b.rho.det());
        }
      }
      CHECK(has_identity);
      for (const auto& orbit : transitive_decomposition(G)) CHECK(G.order() % orbit.size() == 0);
    }
  }

  TEST_CASE("core") {
    for (const auto& name : table_group_names()) CHECK(core(named_group(name)).order() == 1);
    // K x C2 with K acting trivially on time
    GroupElement k;
    k.rho = O2Elem::rot(Rational(1, 3));
    k.sigma = Perm3::parse("(123)");
    GroupElement c;
    c.tau = O2Elem::rot(Rational(1, 2));
    c.sigma = Perm3::parse("(12)");
    c.rho = O2Elem::ref(Rational(0));
    SymmetryGroup G = generate_closure({k, c});
    CHECK(core(G).order() == 3);
    CHECK(G.order() == 6);
  }

  TEST_CASE("action type and decomposition") {
    CHECK(action_type(named_group("line")) == ActionType::Brake);
    CHECK(action_type(named_group("c6")) == ActionType::Cyclic);
    CHECK(action_type(named_group("d12")) == ActionType::Dihedral);
    CHECK(decomposition_string(named_group("trivial")) == "1+1+1");
    CHECK(decomposition_string(named_group("hill")) == "2+1");
    CHECK(decomposition_string(named_group("choreo3")) == "3");
  }

  TEST_CASE("time isotropy") {
    CHECK(time_isotropy(named_group("line"), Rational(0)).order() == 2);
    for (int k = 0; k < 12; ++k) CHECK(time_isotropy(named_group("c6"), Rational(k, 12)).order() == 1);
    SymmetryGroup d12 = named_group("d12");
    std::size_t fix0 = 0;
    for (const auto& g : d12.elements())
      if (g.tau.apply_time(Rational(0)) == Rational(0)) ++fix0;
    SymmetryGroup H = time_isotropy(d12, Rational(0));
    CHECK(H.order() == fix0);
    CHECK(H.order() == 2);
  }

  TEST_CASE("fundamental domain") {
    auto line = fundamental_domain(named_group("line"));
    CHECK(line.t0 == Rational(0));
    CHECK(line.t1 == Rational(1, 2));
    CHECK(line.H0.order() == 2);
    CHECK(line.H1.order() == 2);
    auto d6 = fundamental_domain(named_group("d6"));
    CHECK(d6.t1 - d6.t0 == Rational(1, 6));
    CHECK(d6.H0.order() == 2);
    CHECK(d6.H1.order() == 2);
    CHECK_FALSE(d6.H0.same_elements(d6.H1));
    auto triv = fundamental_domain(named_group("trivial"));
    CHECK(triv.t1 - triv.t0 == Rational(1));
    for (const auto& name : named_group_names()) {
      auto fd = fundamental_domain(named_group(name));
      CHECK(fd.t1 - fd.t0 == Rational(1, static_cast<std::int64_t>(quotient_order(named_group(name)))));
    }
  }

  TEST_CASE("config action") {
    Configuration x{cd(1, 0), cd(-1, 0), cd(0, 0)};
    CHECK(config_action(GroupElement::identity(), x) == x);
    GroupElement anti;
    anti.rho = O2Elem::rot(Rational(1, 2));
    auto y = config_action(anti, x);
    CHECK(std::abs(y[0] - cd(-1, 0)) < 1e-15);
    CHECK(std::abs(y[1] - cd(1, 0)) < 1e-15);
    GroupElement swap;
    swap.sigma = Perm3::parse("(12)");
    Configuration a{cd(1, 2), cd(3, 4), cd(5, 6)};
    auto b = config_action(swap, a);
    CHECK(b[0] == a[1]);
    CHECK(b[1] == a[0]);
    CHECK(b[2] == a[2]);
  }

  TEST_CASE("fixed configuration spaces") {
    Masses m;
    GroupElement iso;
    iso.rho = O2Elem::ref(Rational(0));
    iso.sigma = Perm3::parse("(12)");
    SymmetryGroup H = generate_closure({iso});
    // oracle: rank of the averaging projector restricted to COM-zero configurations
    Eigen::Matrix<double, 6, 6> P = Eigen::Matrix<double, 6, 6>::Zero();
    for (const auto& g : H.elements()) P += config_action_matrix(g);
    P /= static_cast<double>(H.order());
    Eigen::Matrix<double, 6, 6> C = Eigen::Matrix<double, 6, 6>::Identity();
    for (int r = 0; r < 6; ++r)
      for (int s = 0; s < 6; ++s)
        if (r % 2 == s % 2) C(r, s) -= 1.0 / 3;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P * C);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) rank += svd.singularValues()(k) > 1e-9;
    Eigen::MatrixXd B = fixed_config_space(H, m);
    CHECK(B.cols() == rank);
    CHECK(B.cols() == 2);
    for (const auto& g : H.elements()) CHECK((config_action_matrix(g) * B - B).norm() < 1e-12);

    GroupElement s12;
    s12.sigma = Perm3::parse("(12)");
    Eigen::MatrixXd B12 = fixed_config_space(generate_closure({s12}), m);
    for (int c = 0; c < B12.cols(); ++c) {
      CHECK(std::abs(B12(0, c) - B12(2, c)) < 1e-12);
      CHECK(std::abs(B12(1, c) - B12(3, c)) < 1e-12);
    }
    CHECK(fixed_config_space(SymmetryGroup{}, m).cols() == 4);

    Masses bad{{1.0, 2.0, 1.0}};
    CHECK_THROWS_AS(fixed_config_space(generate_closure({s12}), bad), Error);

    for (const auto& name : named_group_names()) {
      SymmetryGroup G = named_group(name);
      Eigen::MatrixXd F = fixed_config_space(G, m);
      for (const auto& g : G.elements()) CHECK((config_action_matrix(g) * F - F).norm() < 1e-12);
    }
  }

  TEST_CASE("hypotheses") {
    for (const auto& name : table_group_names()) {
      auto rep = validate_hypotheses(named_group(name));
      CHECK(rep.hh1);
      CHECK(rep.hh3);
    }
    GroupElement r;
    r.tau = O2Elem::rot(Rational(1, 2));
    auto rep = validate_hypotheses(generate_closure({r}));
    CHECK_FALSE(rep.hh3);
    auto id = validate_hypotheses(SymmetryGroup{});
    CHECK(id.hh1);
    CHECK(id.hh2);
    CHECK(id.hh3);
  }

  TEST_CASE("named group details") {
    SymmetryGroup c6 = named_group("c6");
    CHECK(c6.order() == 6);
    bool found = false;
    for (const auto& g : c6.elements())
      if (g.tau == O2Elem::rot(Rational(1, 6))) {
        found = true;
        CHECK(g.rho.kind == O2Elem::Reflection);
        CHECK(g.sigma.order() == 3);
      }
    CHECK(found);
    SymmetryGroup hill = named_group("hill");
    // up to a shift of the time origin: same rho, sigma and kind of time map
    for (const char* sub : {"line", "isosceles", "choreo21"}) {
      SymmetryGroup H = named_group(sub);
      for (const auto& g : H.elements()) {
        bool found_like = false;
        for (const auto& h : hill.elements())
          found_like = found_like || (h.rho == g.rho && h.sigma == g.sigma && h.tau.kind == g.tau.kind);
        CHECK(found_like);
      }
    }
  }

  TEST_CASE("generator text round trip") {
    for (const auto& name : named_group_names()) {
      SymmetryGroup G = named_group(name);
      auto back = generate_closure(parse_generators(format_generators(G.generators())));
      CHECK(back.same_elements(G));
    }
    CHECK_THROWS_AS(parse_element("tau=rot 1/3 rho=bogus sigma=()"), Error);
    auto g = parse_generators("# comment\ntau=ref 1/2 rho=ref 0 sigma=(12)\n\n");
    REQUIRE(g.size() == 1);
    CHECK(g[0].tau == O2Elem::ref(Rational(1, 2)));
  }
}
