#include "anosov/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace anosov::weyl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = static_cast<int>(images_.size());
  if (d < 1) throw std::invalid_argument("Permutation: empty image list");
  std::vector<char> seen(d + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > d || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection of 1..d");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple_reflection(int i, int d) {
  if (i < 1 || i >= d) throw std::invalid_argument("simple_reflection: index out of range");
  Permutation w = identity(d);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

int Permutation::length() const {
  const int d = degree();
  int inv = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  const int d = degree();
  std::vector<int> img(d);
  for (int i = 1; i <= d; ++i) img[images_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // Bubble the one-line notation to the identity; each adjacent swap that
  // removes an inversion contributes one letter.  Result has length() letters.
  std::vector<int> img = images_;
  std::vector<int> word;
  const int d = degree();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < d; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  // The loop built w^{-1} as a product of simple reflections applied on the
  // right; reversing gives a reduced word for w.
  std::reverse(word.begin(), word.end());
  return word;
}

Eigen::MatrixXd Permutation::matrix() const {
  const int d = degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i <= d; ++i) m(images_[i - 1] - 1, i - 1) = 1.0;
  return m;
}

Eigen::MatrixXd Permutation::lift_det1() const {
  Eigen::MatrixXd m = matrix();
  if (length() % 2 == 1) {
    int last_moved = -1;
    for (int i = 1; i <= degree(); ++i)
      if (images_[i - 1] != i) last_moved = i;
    m.col(last_moved - 1) *= -1.0;
  }
  return m;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  s += ")";
  return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("compose: mismatched degrees");
  std::vector<int> img(u.degree());
  for (int i = 1; i <= u.degree(); ++i) img[i - 1] = u(v(i));
  return Permutation(std::move(img));
}

Permutation longest_element(int d) {
  if (d < 2) throw std::invalid_argument("longest_element: d must be >= 2");
  std::vector<int> img(d);
  for (int i = 0; i < d; ++i) img[i] = d - i;
  return Permutation(std::move(img));
}

Eigen::MatrixXi rank_matrix(const Permutation& w) {
  const int d = w.degree();
  Eigen::MatrixXi r = Eigen::MatrixXi::Zero(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      int c = 0;
      for (int k = 1; k <= i; ++k)
        if (w(k) <= j) ++c;
      r(i - 1, j - 1) = c;
    }
  }
  return r;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree())
    throw std::invalid_argument("bruhat_leq: mismatched degrees");
  const Eigen::MatrixXi ru = rank_matrix(u), rw = rank_matrix(w);
  for (int i = 0; i < u.degree(); ++i)
    for (int j = 0; j < u.degree(); ++j)
      if (ru(i, j) < rw(i, j)) return false;
  return true;
}

Permutation opposition(const Permutation& w) {
  const Permutation w0 = longest_element(w.degree());
  return compose(w0, compose(w, w0));
}

DimSet full_dim_set(int d) {
  DimSet t(d - 1);
  std::iota(t.begin(), t.end(), 1);
  return t;
}

bool is_self_opposite(const DimSet& theta, int d) {
  std::set<int> s(theta.begin(), theta.end());
  for (int i : theta)
    if (!s.count(d - i)) return false;
  return true;
}

DimSet opposite_dim_set(const DimSet& theta, int d) {
  DimSet out;
  for (int i : theta) out.push_back(d - i);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void validate_dim_set(const DimSet& theta, int d) {
  int prev = 0;
  for (int i : theta) {
    if (i <= prev || i >= d)
      throw std::invalid_argument("dimension set must be sorted inside 1..d-1");
    prev = i;
  }
}

// Indices of the simple reflections generating <Delta \ theta>.
std::vector<int> coset_generators(const DimSet& theta, int d) {
  std::vector<int> gens;
  for (int i = 1; i <= d - 1; ++i)
    if (std::find(theta.begin(), theta.end(), i) == theta.end()) gens.push_back(i);
  return gens;
}

}  // namespace

DoubleCoset double_coset_rep(const Permutation& w, const DimSet& theta,
                             const DimSet& theta_prime) {
  const int d = w.degree();
  validate_dim_set(theta, d);
  validate_dim_set(theta_prime, d);
  const std::vector<int> left = coset_generators(theta, d);
  const std::vector<int> right = coset_generators(theta_prime, d);

  Permutation rep = w;
  int len = rep.length();
  bool shortened = true;
  while (shortened) {
    shortened = false;
    for (int i : left) {
      Permutation cand = compose(Permutation::simple_reflection(i, d), rep);
      if (cand.length() < len) {
        rep = cand;
        len = rep.length();
        shortened = true;
      }
    }
    for (int i : right) {
      Permutation cand = compose(rep, Permutation::simple_reflection(i, d));
      if (cand.length() < len) {
        rep = cand;
        len = rep.length();
        shortened = true;
      }
    }
  }
  return DoubleCoset{theta, theta_prime, rep};
}

std::vector<DoubleCoset> enumerate_double_cosets(int d, const DimSet& theta,
                                                 const DimSet& theta_prime) {
  std::set<Permutation> reps;
  for (const Permutation& w : all_permutations(d))
    reps.insert(double_coset_rep(w, theta, theta_prime).rep);
  std::vector<DoubleCoset> out;
  for (const Permutation& r : reps) out.push_back({theta, theta_prime, r});
  return out;
}

std::vector<Permutation> all_permutations(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("all_permutations: d out of range");
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace anosov::weyl
