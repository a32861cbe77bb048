#include "anosov/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace anosov::linalg {

namespace {

RankResult decide(const Eigen::VectorXd& sv, double tol) {
  RankResult out;
  if (sv.size() == 0) return out;
  const double smax = sv(0);
  if (!(smax > 0.0)) return out;  // zero matrix: rank 0, infinite margin
  const double t = tol * smax;
  int r = 0;
  while (r < sv.size() && sv(r) > t) ++r;
  out.rank = r;
  double kept = std::numeric_limits<double>::infinity();
  double dropped = std::numeric_limits<double>::infinity();
  if (r > 0) kept = (sv(r - 1) - t) / smax;
  if (r < sv.size()) dropped = (t - sv(r)) / t;
  out.margin = std::min(kept, dropped);
  return out;
}

}  // namespace

RankResult rank_with_margin(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return RankResult{};
  if (!m.allFinite()) throw std::invalid_argument("rank_with_margin: non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return decide(svd.singularValues(), tol);
}

RankResult rank_of_magnitudes(const Eigen::VectorXd& mags, double tol) {
  Eigen::VectorXd s = mags;
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return decide(s, tol);
}

DimResult intersection_dim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd cat(a.rows(), a.cols() + b.cols());
  cat << a, b;
  const RankResult r = rank_with_margin(cat);
  return DimResult{static_cast<int>(a.cols() + b.cols()) - r.rank, r.margin};
}

DimResult sum_dim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd cat(a.rows(), a.cols() + b.cols());
  cat << a, b;
  const RankResult r = rank_with_margin(cat);
  return DimResult{r.rank, r.margin};
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
  for (int i = 0; i < m.cols(); ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

Signature signature_with_margin(const Eigen::MatrixXd& sym, double tol, double scale) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const Eigen::VectorXd ev = es.eigenvalues();
  Signature sig;
  if (ev.size() == 0) return sig;
  const double emax = scale > 0.0 ? scale : ev.cwiseAbs().maxCoeff();
  if (!(emax > 0.0)) {
    sig.zeros = static_cast<int>(ev.size());
    return sig;
  }
  const double t = tol * emax;
  double kept = std::numeric_limits<double>::infinity();
  double dropped = std::numeric_limits<double>::infinity();
  for (int i = 0; i < ev.size(); ++i) {
    const double a = std::abs(ev(i));
    if (a > t) {
      (ev(i) > 0 ? sig.positives : sig.negatives) += 1;
      kept = std::min(kept, (a - t) / emax);
    } else {
      sig.zeros += 1;
      dropped = std::min(dropped, (t - a) / t);
    }
  }
  sig.margin = std::min(kept, dropped);
  return sig;
}

double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd qa = orthonormalize(a), qb = orthonormalize(b);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb);
  const double c = std::min(1.0, svd.singularValues().minCoeff());
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

double line_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm(), nb = b.norm();
  const double c = std::min(1.0, std::abs(a.dot(b)) / (na * nb));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = g(rng);
  return orthonormalize(m);
}

Eigen::MatrixXd random_sl(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(d, d);
  do {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = g(rng);
  } while (std::abs(m.determinant()) < 1e-6);
  return normalize_det1(m);
}

Eigen::MatrixXd random_unit_upper(int d, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) m(i, j) = g(rng);
  return m;
}

Eigen::MatrixXd normalize_det1(const Eigen::MatrixXd& m) {
  const int d = static_cast<int>(m.rows());
  double det = m.determinant();
  if (det == 0.0 || !std::isfinite(det))
    throw std::invalid_argument("normalize_det1: singular or non-finite matrix");
  Eigen::MatrixXd out = m;
  if (det < 0) {
    out.col(0) *= -1.0;
    det = -det;
  }
  out *= std::pow(det, -1.0 / d);
  return out;
}

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace anosov::linalg
