#include <cmath>
#include <numbers>

#include "doctest.h"
#include "symorb/classifier.hpp"

using namespace symorb;

namespace {

// Rank of the averaging projector on the (n,-n) coefficient pair, computed from
// config_action_matrix and the time action alone.
int brute_mode_dim(const SymmetryGroup& G, int n) {
  const int dim = n == 0 ? 6 : 12;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& g : G.elements()) {
    Eigen::Matrix<double, 6, 6> A = config_action_matrix(g);
    // x(t) = c e^{Jnt} + d e^{-Jnt}; (g x)(t) = A x(tau^{-1} t)
    double phase = 2 * std::numbers::pi * boost::rational_cast<double>(g.tau.turn);
    bool flip = g.tau.kind == O2Elem::Reflection;
    // tau^{-1} t = t - a (rotation) or a - t (reflection, involutive)
    auto mult = [](double ang) {
      Eigen::Matrix2d r;
      r << std::cos(ang), -std::sin(ang), std::sin(ang), std::cos(ang);
      return r;
    };
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < 3; ++i) {
      if (n == 0) {
        T.block<2, 2>(2 * i, 2 * i) = Eigen::Matrix2d::Identity();
        continue;
      }
      // complex multiplication by e^{-Jn a} acting on (Re, Im)
      if (!flip) {
        T.block<2, 2>(2 * i, 2 * i) = mult(-n * phase);
        T.block<2, 2>(6 + 2 * i, 6 + 2 * i) = mult(n * phase);
      } else {
        // e^{Jn(a - t)}: coefficient of e^{-Jnt} receives c e^{Jna}
        T.block<2, 2>(6 + 2 * i, 2 * i) = mult(n * phase);
        T.block<2, 2>(2 * i, 6 + 2 * i) = mult(-n * phase);
      }
    }
    Eigen::MatrixXd Afull = Eigen::MatrixXd::Zero(dim, dim);
    if (n == 0) {
      Afull = A;
    } else if (g.rho.kind == O2Elem::Rotation) {
      Afull.topLeftCorner(6, 6) = A;
      Afull.bottomRightCorner(6, 6) = A;
    } else {
      // a plane reflection conjugates, so it carries the mode n into -n
      Afull.topRightCorner(6, 6) = A;
      Afull.bottomLeftCorner(6, 6) = A;
    }
    P += Afull * T;
  }
  P /= static_cast<double>(G.order());
  // center of mass zero (unit masses)
  Eigen::MatrixXd C = Eigen::MatrixXd::Identity(dim, dim);
  for (int blk = 0; blk < dim / 6; ++blk)
    for (int r = 0; r < 6; ++r)
      for (int s = 0; s < 6; ++s)
        if (r % 2 == s % 2) C(6 * blk + r, 6 * blk + s) -= 1.0 / 3;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P * C);
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k) rank += svd.singularValues()(k) > 1e-9;
  return rank;
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("type R") {
    CHECK(is_type_R(named_group("lagrange")));
    CHECK_FALSE(is_type_R(named_group("c6")));
    CHECK(is_type_R(named_group("trivial")));
    for (const auto& name : named_group_names()) {
      SymmetryGroup G = named_group(name);
      bool mismatch = false;
      for (const auto& g : G.elements()) mismatch = mismatch || g.tau.det() != g.rho.det();
      CHECK(is_type_R(G) == !mismatch);
    }
  }

  TEST_CASE("redundant subgroup") {
    for (const auto& name : table_group_names()) CHECK(redundant_subgroup(named_group(name)).order() == 1);
    GroupElement r;
    r.tau = O2Elem::rot(Rational(1, 2));
    SymmetryGroup G = generate_closure({r});
    CHECK(redundant_subgroup(G).same_elements(G));
    CHECK(redundant_subgroup(SymmetryGroup{}).order() == 1);
  }

  TEST_CASE("rotating frame reduction") {
    SymmetryGroup g60 = named_group("lagrange60");
    CHECK(g60.order() == 60);
    auto red = rotating_frame_reduce(g60, Rational(0));
    CHECK(red.group.same_elements(named_group("lagrange")));
    CHECK(red.omega == Rational(3, 10));
    SymmetryGroup g10 = named_group("choreo21_10");
    CHECK(g10.order() == 10);
    auto red2 = rotating_frame_reduce(g10, Rational(0));
    CHECK(red2.group.same_elements(named_group("choreo21")));
    CHECK(red2.omega == Rational(2, 5));
    auto same = rotating_frame_reduce(named_group("lagrange"), Rational(1, 7));
    CHECK(same.group.same_elements(named_group("lagrange")));
    CHECK(same.omega == Rational(1, 7));
  }

  TEST_CASE("reduced type R groups carry no plane rotation on time rotations") {
    for (const auto& name : named_group_names()) {
      SymmetryGroup G = named_group(name);
      if (!is_type_R(G)) continue;
      auto red = rotating_frame_reduce(G, Rational(0));
      for (const auto& g : red.group.elements())
        if (g.tau.kind == O2Elem::Rotation && !g.tau.is_identity()) CHECK(g.rho.is_identity());
    }
  }

  TEST_CASE("mode spaces") {
    Masses m;
    CHECK(equivariant_mode_space(named_group("choreo3"), m, 0).dim() == 0);
    CHECK(equivariant_mode_space(named_group("choreo3"), m, 1).dim() > 0);
    for (int n = -6; n <= 6; ++n) CHECK(equivariant_mode_space(named_group("choreo21"), m, n).dim() > 0);
  }

  TEST_CASE("mode space dimension matches the projector oracle") {
    Masses m;
    for (const auto& name : table_group_names()) {
      SymmetryGroup G = named_group(name);
      for (int n = 0; n <= 6; ++n) {
        CAPTURE(name);
        CAPTURE(n);
        CHECK(equivariant_mode_space(G, m, n).dim() == brute_mode_dim(G, n));
      }
    }
  }

  TEST_CASE("coercivity") {
    Masses m;
    CHECK(is_coercive(named_group("trivial"), m, 0.5));
    CHECK_FALSE(is_coercive(named_group("trivial"), m, 0.0));
    CHECK_FALSE(is_coercive(named_group("choreo3"), m, 1.0));
    for (const auto& name : named_group_names())
      for (double w : {0.5, -0.3, 1.25, 2.9}) CHECK(is_coercive(named_group(name), m, w));
    // a time reflection allows constant loops but no pure mode n != 0
    SymmetryGroup b1 = named_group("example_bound1");
    CHECK_FALSE(is_coercive(b1, m, 0.0));
    for (double w : {-2.0, -1.0, 1.0, 2.0}) CHECK(is_coercive(b1, m, w));
    CHECK(coercive_set(b1, m).str() == "omega != 0");
  }

  TEST_CASE("bound to collisions") {
    Masses m;
    CHECK(is_bound_to_collisions(named_group("example_bound1"), m).verdict == Verdict::Proved);
    CHECK(is_bound_to_collisions(named_group("example_bound2"), m).verdict == Verdict::Proved);
    CHECK(is_bound_to_collisions(named_group("lagrange"), m).verdict == Verdict::Refuted);
  }

  TEST_CASE("homographic") {
    Masses m;
    GroupElement k;
    k.rho = O2Elem::rot(Rational(1, 3));
    k.sigma = Perm3::parse("(123)");
    CHECK(is_homographic(generate_closure({k}), m));
    CHECK_FALSE(is_homographic(named_group("trivial"), m));
    GroupElement a;
    a.rho = O2Elem::rot(Rational(1, 2));
    a.sigma = Perm3::parse("(12)");
    CHECK(is_homographic(generate_closure({a}), m));
  }

  TEST_CASE("rcp") {
    CHECK(has_rcp(named_group("trivial")));
    CHECK_FALSE(has_rcp(named_group("isosceles")));
    CHECK(has_rcp(named_group("d6")));
  }

  TEST_CASE("classify rows") {
    Masses m;
    auto d12 = classify(named_group("d12"), m, "d12");
    CHECK(d12.order == 12);
    CHECK_FALSE(d12.type_R);
    CHECK(d12.action == ActionType::Dihedral);
    CHECK(d12.decomposition == "3");
    CHECK_FALSE(d12.rcp);
    auto line = classify(named_group("line"), m, "line");
    CHECK(line.order == 2);
    CHECK(line.type_R);
    CHECK(line.action == ActionType::Brake);
    CHECK(line.decomposition == "1+1+1");
    auto c21 = classify(named_group("choreo21"), m, "choreo21");
    CHECK(c21.action == ActionType::Cyclic);
    CHECK(c21.decomposition == "2+1");
    CHECK(c21.rcp);
    CHECK(report_to_text(c21) == report_to_text(classify(named_group("choreo21"), m, "choreo21")));
  }

  TEST_CASE("table columns") {
    auto rows = build_table();
    REQUIRE(rows.size() == 10);
    int yes = 0, d111 = 0, d21 = 0, d3 = 0;
    for (const auto& r : rows) {
      yes += r.type_R;
      d111 += r.decomposition == "1+1+1";
      d21 += r.decomposition == "2+1";
      d3 += r.decomposition == "3";
      if (r.fully_uncoercive) CHECK_FALSE(r.type_R);
    }
    CHECK(yes == 7);
    CHECK(d111 == 2);
    CHECK(d21 == 3);
    CHECK(d3 == 5);
  }
}
