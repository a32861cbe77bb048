#ifndef ANOSOV_SPACES_HPP
#define ANOSOV_SPACES_HPP

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "anosov/linalg.hpp"
#include "anosov/weyl.hpp"

namespace anosov::spaces {

/// The supported homogeneous-space families of SL_d(R) (and products).
enum class Family { FlagFlag, Complementary, QuadForm, GroupManifold, PseudoHyp };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Partial flag indexed by a self-opposite dimension set; subspace xi^i is
/// the span of the first i frame columns for each i in dims.
struct PartialFlag {
  weyl::DimSet dims;
  Eigen::MatrixXd frame;  // d x d orthonormal

  int d() const { return static_cast<int>(frame.rows()); }
  Eigen::MatrixXd subspace(int i) const { return frame.leftCols(i); }
};

/// Orthonormalizes the frame in column order and validates dims
/// (sorted, self-opposite).
PartialFlag make_flag(weyl::DimSet dims, const Eigen::MatrixXd& frame);
PartialFlag standard_flag(weyl::DimSet dims, int d);
/// g . f, frame re-orthonormalized.
PartialFlag translate_flag(const Eigen::MatrixXd& g, const PartialFlag& f);

// -- points of the five space families ---------------------------------------

struct ComplementaryPair {
  Eigen::MatrixXd plus_basis;   // d x p, orthonormal columns
  Eigen::MatrixXd minus_basis;  // d x q
};

struct QuadraticForm {
  Eigen::MatrixXd matrix;  // symmetric, |det| = 1, signature (p,q), p <= q
  int p = 0;
  int q = 0;
};

struct GroupManifoldPoint {
  Eigen::MatrixXd g0;  // m x m, det 1
};

struct NegativeLine {
  Eigen::VectorXd v;  // Q_{p,q}(v) < 0
  int p = 0;
  int q = 0;
};

struct FlagPoint {
  PartialFlag flag;  // X itself a flag manifold
};

using SpacePoint =
    std::variant<ComplementaryPair, QuadraticForm, GroupManifoldPoint, NegativeLine, FlagPoint>;

ComplementaryPair make_complementary_pair(const Eigen::MatrixXd& plus,
                                          const Eigen::MatrixXd& minus);
/// Normalizes to |det| = 1 and the p <= q sign convention.
QuadraticForm make_quadratic_form(const Eigen::MatrixXd& sym);
GroupManifoldPoint make_group_manifold_point(const Eigen::MatrixXd& g0);
NegativeLine make_negative_line(const Eigen::VectorXd& v, int p, int q);

/// diag(I_p, -I_q).
Eigen::MatrixXd pq_form_matrix(int p, int q);

/// A (family, theta) choice identifying one position problem.  d is the
/// ambient dimension (m for group manifolds).
struct FamilySpec {
  Family family = Family::FlagFlag;
  int d = 0;
  int p = 0;  // Complementary / QuadForm / PseudoHyp
  int q = 0;
  weyl::DimSet theta;        // flag side (left factor for group manifolds)
  weyl::DimSet theta_right;  // group manifolds only
  weyl::DimSet theta_space;  // FlagFlag only: X = F_{theta'}
};

void validate(const FamilySpec& spec);
SpacePoint base_point(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);

// -- position fingerprints ----------------------------------------------------

/// Canonical integer invariant vector identifying a relative position, plus
/// the smallest margin that certified the rank/sign decisions behind it.
struct PositionFingerprint {
  Family family = Family::FlagFlag;
  std::vector<int> values;
  double margin = 0.0;
  bool boundary_uncertain = false;

  bool same_position(const PositionFingerprint& o) const {
    return family == o.family && values == o.values;
  }
};

struct TransverseResult {
  bool transverse = false;
  double margin = 0.0;
};

/// For every i in dims(xi): xi^i + eta^{d-i} direct.  Margin is the least
/// scaled singular value of the concatenated bases over all i.
TransverseResult transverse(const PartialFlag& xi, const PartialFlag& eta);

/// Intersection-dimension matrix r(i,j) = dim(xi^i ∩ eta^j), i in dims(xi),
/// j in dims(eta), flattened row-major into the fingerprint.
PositionFingerprint classify_flag_flag(const PartialFlag& xi, const PartialFlag& eta);

/// (a_i, b_i, c_ij) = (dim(xi^i ∩ U+), dim(xi^i ∩ U-), dim(xi^i + proj_+ xi^j)).
PositionFingerprint classify_flag_pair(const PartialFlag& xi, const ComplementaryPair& x);

/// theta = {1, d-1} (every d) and theta = Delta with d = 3 share one encoding:
/// (sign of x on xi^1, signature of x|xi^{d-1}, rank of the pairing
/// xi^1 x xi^{d-1}).  Other (theta, d) are rejected.
PositionFingerprint classify_flag_form(const PartialFlag& xi, const QuadraticForm& x);

/// Delegates to classify_flag_flag(xi_L, g . xi_R).
PositionFingerprint classify_group_manifold(const PartialFlag& xi_left,
                                            const PartialFlag& xi_right,
                                            const GroupManifoldPoint& g);

/// Two relative positions: the negative line x may or may not lie in the
/// hyperplane orthogonal to the isotropic line.  values = {1} iff incident.
PositionFingerprint classify_line_hpq(const Eigen::VectorXd& isotropic_line,
                                      const NegativeLine& x);

/// Position of (standard flag(s), x) for the given family.
PositionFingerprint classify(const FamilySpec& spec, const SpacePoint& x);

/// Position of (flag(s) given by orthonormal frames, x).  One frame, except
/// two for group manifolds.  For PseudoHyp the first frame's first column is
/// the isotropic line.
PositionFingerprint classify_vs(const FamilySpec& spec,
                                const std::vector<Eigen::MatrixXd>& frames,
                                const SpacePoint& x);

/// g . x for g in the acting group (a pair (gL, gR) for group manifolds,
/// an O(p,q) element for PseudoHyp).
SpacePoint act(const FamilySpec& spec, const std::vector<Eigen::MatrixXd>& g,
               const SpacePoint& x);

/// Orthogonal frame(s) k with pos(F_std, x) = pos(k . F_std, base point).
/// The PseudoHyp transformer is an O(p,q) element instead.
struct Normalized {
  std::vector<Eigen::MatrixXd> k;
  SpacePoint base;
};
Normalized normalize_pair(const FamilySpec& spec, const SpacePoint& x);

/// Matrix of Sym^{d-1} A on the orthonormalized binary-form basis
/// x^{d-1-j} y^j sqrt(C(d-1,j)); rotations lift to rotations and the lift is
/// multiplicative with determinant one.
Eigen::MatrixXd symmetric_power_lift(const Eigen::Matrix2d& a, int d);

/// Random point of the family (uniform frames / random congruence orbits /
/// K A K sampling / uniform negative directions).
SpacePoint random_point(const FamilySpec& spec, linalg::Rng& rng);

/// Random element of the block parabolic P_theta: block upper-triangular
/// with random diagonal signs, determinant one.
Eigen::MatrixXd random_parabolic(const weyl::DimSet& theta, int d, linalg::Rng& rng);

/// Distance between two points of the same family (frame / normalized matrix
/// distance); used by the dynamical-relation probe.
double point_distance(const FamilySpec& spec, const SpacePoint& x, const SpacePoint& y);

}  // namespace anosov::spaces

#endif
