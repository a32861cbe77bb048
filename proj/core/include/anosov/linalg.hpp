#ifndef ANOSOV_LINALG_HPP
#define ANOSOV_LINALG_HPP

#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace anosov::linalg {

using Rng = std::mt19937_64;

/// Relative singular-value threshold below which a direction counts as zero.
inline constexpr double kRankTol = 1e-8;
/// Decisions with margin below this are reported boundary-uncertain.
inline constexpr double kBoundaryMargin = 1e-6;

struct RankResult {
  int rank = 0;
  /// Scale-free distance of the decision to the threshold: the kept side is
  /// measured as (sigma_r - t)/sigma_max, the dropped side as
  /// (t - sigma_{r+1})/t, and the margin is the smaller of the two.  +inf when
  /// the matrix is empty or zero (nothing to decide).
  double margin = std::numeric_limits<double>::infinity();
};

RankResult rank_with_margin(const Eigen::MatrixXd& m, double tol = kRankTol);

/// Rank decision on a list of magnitudes (used for eigenvalue spectra).
RankResult rank_of_magnitudes(const Eigen::VectorXd& mags, double tol = kRankTol);

/// dim(colspan(a) ∩ colspan(b)) = cols(a) + cols(b) - rank[a | b],
/// assuming each input has full column rank.  Margin as in rank_with_margin.
struct DimResult {
  int dim = 0;
  double margin = std::numeric_limits<double>::infinity();
};
DimResult intersection_dim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
DimResult sum_dim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Orthonormalize columns in order (thin QR with positive diagonal).
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m);

/// Signature of a symmetric matrix at relative tolerance: counts of
/// eigenvalues above, within, and below the zero band.  The zero band is
/// tol * scale; scale defaults to the matrix's own largest |eigenvalue| but
/// can be overridden with an ambient scale (restrictions of a larger form).
struct Signature {
  int positives = 0;
  int zeros = 0;
  int negatives = 0;
  double margin = std::numeric_limits<double>::infinity();
  bool operator==(const Signature&) const = default;
};
Signature signature_with_margin(const Eigen::MatrixXd& sym, double tol = kRankTol,
                                double scale = -1.0);

/// sin of the largest principal angle between equal-dimensional column spans.
double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// sin-angle distance between unit vectors seen as projective points.
double line_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

Eigen::MatrixXd random_orthogonal(int d, Rng& rng);
/// Gaussian matrix normalized to determinant one.
Eigen::MatrixXd random_sl(int d, Rng& rng);
/// Random unit-upper-triangular with gaussian entries above the diagonal.
Eigen::MatrixXd random_unit_upper(int d, Rng& rng, double scale = 1.0);

/// Scale a square matrix by |det|^{-1/d}; flips one column if det < 0.
Eigen::MatrixXd normalize_det1(const Eigen::MatrixXd& m);

/// FNV-1a over bytes; used for content hashes in file formats.
std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed = 1469598103934665603ull);

}  // namespace anosov::linalg

#endif
