#ifndef ANOSOV_WEYL_HPP
#define ANOSOV_WEYL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace anosov::weyl {

/// Element of the symmetric group S_d in one-line notation, 1-based:
/// images[i-1] = w(i).  This is the Weyl group of SL_d(R).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int d);
  /// The simple reflection s_i swapping i and i+1 (1 <= i <= d-1).
  static Permutation simple_reflection(int i, int d);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Inversion count; equals the word length in the simple reflections.
  int length() const;
  Permutation inverse() const;
  bool is_identity() const;

  /// One reduced word as a sequence of simple-reflection indices.
  std::vector<int> reduced_word() const;

  /// 0/1 matrix with column i equal to e_{w(i)}.
  Eigen::MatrixXd matrix() const;
  /// Same matrix with the sign of the last moved column flipped when
  /// needed, so that the lift into SO(d) of the ambient SL_d exists
  /// (determinant one).
  Eigen::MatrixXd lift_det1() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// (u * v)(i) = u(v(i)); matches matrix(u) * matrix(v) = matrix(u*v).
Permutation compose(const Permutation& u, const Permutation& v);

/// The order-reversing permutation i -> d+1-i, the longest element w0.
Permutation longest_element(int d);

/// Rank matrix r(i,j) = #{k <= i : w(k) <= j}, as a d x d integer matrix.
Eigen::MatrixXi rank_matrix(const Permutation& w);

/// Bruhat order u <= w via the rank-matrix criterion:
/// r_u(i,j) >= r_w(i,j) for all i,j.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Conjugation by the longest element, w -> w0 w w0.  An involution of W
/// inducing alpha_j -> alpha_{d-j} on simple roots.
Permutation opposition(const Permutation& w);

/// Dimension sets theta are sorted subsets of {1,...,d-1}; <Delta \ theta>
/// is the parabolic subgroup of W generated by the s_i with i not in theta.
using DimSet = std::vector<int>;

DimSet full_dim_set(int d);
bool is_self_opposite(const DimSet& theta, int d);
DimSet opposite_dim_set(const DimSet& theta, int d);

/// Double coset in <Delta\theta> \ W / <Delta\theta'>, held by its unique
/// minimal-length representative.
struct DoubleCoset {
  DimSet theta;
  DimSet theta_prime;
  Permutation rep;

  bool operator==(const DoubleCoset& o) const {
    return theta == o.theta && theta_prime == o.theta_prime && rep == o.rep;
  }
  bool operator<(const DoubleCoset& o) const { return rep < o.rep; }
};

/// Minimal-length representative of the double coset of w.  Constant on
/// cosets and idempotent.
DoubleCoset double_coset_rep(const Permutation& w, const DimSet& theta,
                             const DimSet& theta_prime);

/// All double cosets of <Delta\theta> \ S_d / <Delta\theta'>, sorted by
/// representative.
std::vector<DoubleCoset> enumerate_double_cosets(int d, const DimSet& theta,
                                                 const DimSet& theta_prime);

/// All of S_d in lexicographic order (d <= 8 guarded).
std::vector<Permutation> all_permutations(int d);

}  // namespace anosov::weyl

#endif
