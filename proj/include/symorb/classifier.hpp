#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symorb/group.hpp"

namespace symorb {

bool is_type_R(const SymmetryGroup& G);

/// Generated by the elements with a nontrivial time rotation and trivial rho, sigma.
SymmetryGroup redundant_subgroup(const SymmetryGroup& G);

/// The group conjugated by the plane reflection across the first axis.
SymmetryGroup mirror(const SymmetryGroup& G);

struct FrameReduction {
  SymmetryGroup group;
  Rational omega;
};

/// Change of rotating frame removing the plane rotation carried by the
/// minimal time rotation, followed by the quotient by redundant elements.
FrameReduction rotating_frame_reduce(const SymmetryGroup& G, Rational omega);

/// Inertial-frame (omega = 0) group whose reduction is (G, omega).
SymmetryGroup rotating_frame_unreduce(const SymmetryGroup& G, Rational omega);

/// Fixed subspace of the (n, -n) mode pair. Real coordinates are
/// (Re c_{i,n}, Im c_{i,n})_i followed by (Re c_{i,-n}, Im c_{i,-n})_i;
/// for n = 0 only the first six are used.
struct ModeSpace {
  int n = 0;
  Eigen::MatrixXd basis;  // orthonormal columns
  int single_mode_dim = 0;  // equivariant loops made of the mode n alone
  int dim() const { return static_cast<int>(basis.cols()); }
};

ModeSpace equivariant_mode_space(const SymmetryGroup& G, const Masses& m, int n);

/// Integer frequencies, as residues modulo `period`, at which the kinetic
/// form degenerates.
struct CoercivitySet {
  std::int64_t period = 1;
  std::vector<std::int64_t> excluded;  // residues of the nonzero degenerate frequencies
  bool zero = false;                   // omega = 0 degenerate
  bool excludes(std::int64_t n) const;
  std::string str() const;
};

CoercivitySet coercive_set(const SymmetryGroup& G, const Masses& m);
bool is_coercive(const SymmetryGroup& G, const Masses& m, double omega);

enum class Verdict { Proved, Refuted, Suspected };
std::string verdict_name(Verdict v);

struct CollisionVerdict {
  Verdict verdict = Verdict::Suspected;
  std::string evidence;
  double best_min_distance = 0.0;  // refutation only
};

CollisionVerdict is_bound_to_collisions(const SymmetryGroup& G, const Masses& m, int seeds = 8);

bool is_homographic(const SymmetryGroup& G, const Masses& m);

/// Both conditions of the rotating circle property on one subgroup.
bool subgroup_has_rcp(const SymmetryGroup& K);
bool has_rcp(const SymmetryGroup& G);

/// Distinct time isotropy subgroups: ker tau and those at reflection-fixed times.
std::vector<SymmetryGroup> time_isotropy_subgroups(const SymmetryGroup& G);

struct ClassificationReport {
  std::string name;
  std::size_t order = 0;
  bool type_R = false;
  ActionType action = ActionType::Cyclic;
  std::string decomposition;
  std::size_t core_order = 0;
  bool redundant = false;
  CoercivitySet coercive_at;
  CollisionVerdict bound_to_collisions;
  bool homographic = false;
  bool fully_uncoercive = false;
  bool rcp = false;
  std::optional<bool> hgm;  // expected value, catalog groups only
};

ClassificationReport classify(const SymmetryGroup& G, const Masses& m, const std::string& name = "");

/// One report per Table-1 group, in table order.
std::vector<ClassificationReport> build_table();

std::string report_to_text(const ClassificationReport& r);
std::string report_csv_header();
std::string report_to_csv(const ClassificationReport& r);

}  // namespace symorb
