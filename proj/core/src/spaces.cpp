#include "anosov/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anosov::spaces {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using linalg::kBoundaryMargin;
using linalg::kRankTol;

namespace {

struct Decision {
  bool above = false;
  double margin = std::numeric_limits<double>::infinity();
};

// Same margin semantics as rank_with_margin, for a single scalar decision
// |value| vs kRankTol * scale.
Decision threshold_decision(double value, double scale) {
  Decision d;
  if (!(scale > 0.0)) return d;
  const double t = kRankTol * scale;
  if (value > t) {
    d.above = true;
    d.margin = (value - t) / scale;
  } else {
    d.above = false;
    d.margin = (t - value) / t;
  }
  return d;
}

void finalize(PositionFingerprint& fp) {
  fp.boundary_uncertain = fp.margin < kBoundaryMargin;
}

double spectral_norm(const MatrixXd& m) {
  Eigen::JacobiSVD<MatrixXd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::FlagFlag: return "flag";
    case Family::Complementary: return "complementary";
    case Family::QuadForm: return "quadform";
    case Family::GroupManifold: return "groupmanifold";
    case Family::PseudoHyp: return "pseudohyp";
  }
  throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& name) {
  if (name == "flag") return Family::FlagFlag;
  if (name == "complementary") return Family::Complementary;
  if (name == "quadform") return Family::QuadForm;
  if (name == "groupmanifold") return Family::GroupManifold;
  if (name == "pseudohyp") return Family::PseudoHyp;
  throw std::invalid_argument("unknown family: " + name);
}

PartialFlag make_flag(weyl::DimSet dims, const MatrixXd& frame) {
  const int d = static_cast<int>(frame.rows());
  if (frame.cols() != d) throw std::invalid_argument("make_flag: frame must be square");
  if (dims.empty()) throw std::invalid_argument("make_flag: empty dimension set");
  int prev = 0;
  for (int i : dims) {
    if (i <= prev || i >= d) throw std::invalid_argument("make_flag: bad dimension set");
    prev = i;
  }
  if (!weyl::is_self_opposite(dims, d))
    throw std::invalid_argument("make_flag: dimension set must be self-opposite");
  PartialFlag f;
  f.dims = std::move(dims);
  f.frame = linalg::orthonormalize(frame);
  return f;
}

PartialFlag standard_flag(weyl::DimSet dims, int d) {
  return make_flag(std::move(dims), MatrixXd::Identity(d, d));
}

PartialFlag translate_flag(const MatrixXd& g, const PartialFlag& f) {
  return make_flag(f.dims, g * f.frame);
}

ComplementaryPair make_complementary_pair(const MatrixXd& plus, const MatrixXd& minus) {
  if (plus.rows() != minus.rows())
    throw std::invalid_argument("complementary pair: dimension mismatch");
  ComplementaryPair x{linalg::orthonormalize(plus), linalg::orthonormalize(minus)};
  MatrixXd cat(plus.rows(), plus.cols() + minus.cols());
  cat << x.plus_basis, x.minus_basis;
  if (cat.cols() != cat.rows() || linalg::rank_with_margin(cat).rank != cat.rows())
    throw std::invalid_argument("complementary pair: subspaces are not transverse");
  return x;
}

QuadraticForm make_quadratic_form(const MatrixXd& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("quadratic form: not square");
  MatrixXd m = 0.5 * (sym + sym.transpose());
  const linalg::Signature sig = linalg::signature_with_margin(m);
  if (sig.zeros != 0) throw std::invalid_argument("quadratic form: degenerate matrix");
  int p = sig.positives, q = sig.negatives;
  if (p > q) {  // forms live up to scale; negate to the p <= q convention
    m = -m;
    std::swap(p, q);
  }
  const double det = std::abs(m.determinant());
  m /= std::pow(det, 1.0 / m.rows());
  return QuadraticForm{m, p, q};
}

GroupManifoldPoint make_group_manifold_point(const MatrixXd& g0) {
  return GroupManifoldPoint{linalg::normalize_det1(g0)};
}

NegativeLine make_negative_line(const VectorXd& v, int p, int q) {
  if (v.size() != p + q) throw std::invalid_argument("negative line: wrong length");
  const double val = v.head(p).squaredNorm() - v.tail(q).squaredNorm();
  if (!(val < -kRankTol * v.squaredNorm()))
    throw std::invalid_argument("negative line: vector is not negative for Q_{p,q}");
  return NegativeLine{v / v.norm(), p, q};
}

Eigen::MatrixXd pq_form_matrix(int p, int q) {
  MatrixXd j = MatrixXd::Identity(p + q, p + q);
  j.bottomRightCorner(q, q) *= -1.0;
  return j;
}

void validate(const FamilySpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("family spec: d must be >= 2");
  auto check_theta = [&](const weyl::DimSet& t, const char* which) {
    if (t.empty()) throw std::invalid_argument(std::string("family spec: empty ") + which);
    int prev = 0;
    for (int i : t) {
      if (i <= prev || i >= spec.d)
        throw std::invalid_argument(std::string("family spec: bad ") + which);
      prev = i;
    }
  };
  switch (spec.family) {
    case Family::FlagFlag:
      check_theta(spec.theta, "theta");
      check_theta(spec.theta_space, "theta_space");
      if (!weyl::is_self_opposite(spec.theta, spec.d) ||
          !weyl::is_self_opposite(spec.theta_space, spec.d))
        throw std::invalid_argument("family spec: dimension sets must be self-opposite");
      break;
    case Family::Complementary:
      check_theta(spec.theta, "theta");
      if (!weyl::is_self_opposite(spec.theta, spec.d))
        throw std::invalid_argument("family spec: theta must be self-opposite");
      if (spec.p < 1 || spec.q < 1 || spec.p + spec.q != spec.d)
        throw std::invalid_argument("family spec: need p,q >= 1 with p+q = d");
      break;
    case Family::QuadForm: {
      check_theta(spec.theta, "theta");
      const weyl::DimSet ends{1, spec.d - 1};
      if (!(spec.theta == ends || (spec.d == 3 && spec.theta == weyl::full_dim_set(3))))
        throw std::invalid_argument(
            "family spec: quadform supports theta = {1, d-1} (and full flags only for d = 3)");
      if (spec.p < 0 || spec.q < 0 || spec.p + spec.q != spec.d || spec.p > spec.q)
        throw std::invalid_argument("family spec: need signature p <= q with p+q = d");
      break;
    }
    case Family::GroupManifold:
      check_theta(spec.theta, "theta");
      check_theta(spec.theta_right, "theta_right");
      if (!weyl::is_self_opposite(spec.theta, spec.d) ||
          !weyl::is_self_opposite(spec.theta_right, spec.d))
        throw std::invalid_argument("family spec: dimension sets must be self-opposite");
      break;
    case Family::PseudoHyp:
      if (spec.p < 2 || spec.q < spec.p || spec.p + spec.q != spec.d)
        throw std::invalid_argument("family spec: pseudohyp needs 2 <= p <= q, p+q = d");
      break;
  }
}

SpacePoint base_point(const FamilySpec& spec) {
  const int d = spec.d;
  switch (spec.family) {
    case Family::FlagFlag:
      return FlagPoint{standard_flag(spec.theta_space, d)};
    case Family::Complementary: {
      const MatrixXd id = MatrixXd::Identity(d, d);
      return ComplementaryPair{id.leftCols(spec.p), id.rightCols(spec.q)};
    }
    case Family::QuadForm:
      return make_quadratic_form(pq_form_matrix(spec.p, spec.q));
    case Family::GroupManifold:
      return GroupManifoldPoint{MatrixXd::Identity(d, d)};
    case Family::PseudoHyp:
      return make_negative_line(VectorXd::Unit(d, d - 1), spec.p, spec.q);
  }
  throw std::logic_error("base_point: bad enum");
}

std::string describe(const FamilySpec& spec) {
  std::string s = family_name(spec.family) + "(d=" + std::to_string(spec.d);
  if (spec.family == Family::Complementary || spec.family == Family::QuadForm ||
      spec.family == Family::PseudoHyp)
    s += ",p=" + std::to_string(spec.p) + ",q=" + std::to_string(spec.q);
  auto dims = [](const weyl::DimSet& t) {
    std::string o = "{";
    for (size_t i = 0; i < t.size(); ++i) o += (i ? "," : "") + std::to_string(t[i]);
    return o + "}";
  };
  if (!spec.theta.empty()) s += ",theta=" + dims(spec.theta);
  if (spec.family == Family::GroupManifold) s += ",theta_right=" + dims(spec.theta_right);
  if (spec.family == Family::FlagFlag) s += ",theta_space=" + dims(spec.theta_space);
  return s + ")";
}

TransverseResult transverse(const PartialFlag& xi, const PartialFlag& eta) {
  const int d = xi.d();
  if (eta.d() != d) throw std::invalid_argument("transverse: dimension mismatch");
  for (int i : xi.dims)
    if (std::find(eta.dims.begin(), eta.dims.end(), d - i) == eta.dims.end())
      throw std::invalid_argument("transverse: dimension sets are not iota-compatible");
  TransverseResult out{true, std::numeric_limits<double>::infinity()};
  for (int i : xi.dims) {
    MatrixXd cat(d, d);
    cat << xi.subspace(i), eta.subspace(d - i);
    Eigen::JacobiSVD<MatrixXd> svd(cat);
    const VectorXd sv = svd.singularValues();
    const double scaled = sv(d - 1) / sv(0);
    out.margin = std::min(out.margin, scaled);
    if (scaled <= kRankTol) out.transverse = false;
  }
  return out;
}

PositionFingerprint classify_flag_flag(const PartialFlag& xi, const PartialFlag& eta) {
  if (xi.d() != eta.d()) throw std::invalid_argument("classify_flag_flag: dimension mismatch");
  PositionFingerprint fp;
  fp.family = Family::FlagFlag;
  fp.margin = std::numeric_limits<double>::infinity();
  for (int i : xi.dims) {
    for (int j : eta.dims) {
      const linalg::DimResult r = linalg::intersection_dim(xi.subspace(i), eta.subspace(j));
      fp.values.push_back(r.dim);
      fp.margin = std::min(fp.margin, r.margin);
    }
  }
  finalize(fp);
  return fp;
}

PositionFingerprint classify_flag_pair(const PartialFlag& xi, const ComplementaryPair& x) {
  const int d = xi.d();
  const int p = static_cast<int>(x.plus_basis.cols());
  const int q = static_cast<int>(x.minus_basis.cols());
  if (p + q != d || x.plus_basis.rows() != d)
    throw std::invalid_argument("classify_flag_pair: dimension mismatch");

  MatrixXd cat(d, d);
  cat << x.plus_basis, x.minus_basis;
  Eigen::JacobiSVD<MatrixXd> svd(cat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const VectorXd sv = svd.singularValues();
  if (sv(d - 1) <= kRankTol * sv(0))
    throw std::invalid_argument("classify_flag_pair: point is not a transverse pair");

  PositionFingerprint fp;
  fp.family = Family::Complementary;
  fp.margin = sv(d - 1) / sv(0);

  // projection onto U^+ along U^-
  const MatrixXd proj_plus = x.plus_basis * cat.inverse().topRows(p);

  for (int i : xi.dims) {
    const linalg::DimResult a = linalg::intersection_dim(xi.subspace(i), x.plus_basis);
    fp.values.push_back(a.dim);
    fp.margin = std::min(fp.margin, a.margin);
  }
  for (int i : xi.dims) {
    const linalg::DimResult b = linalg::intersection_dim(xi.subspace(i), x.minus_basis);
    fp.values.push_back(b.dim);
    fp.margin = std::min(fp.margin, b.margin);
  }
  for (int i : xi.dims) {
    for (int j : xi.dims) {
      const linalg::DimResult c = linalg::sum_dim(xi.subspace(i), proj_plus * xi.subspace(j));
      fp.values.push_back(c.dim);
      fp.margin = std::min(fp.margin, c.margin);
    }
  }
  finalize(fp);
  return fp;
}

namespace {

// (sign on xi^1, signature on xi^{d-1}, pairing rank) for one sign choice of x.
PositionFingerprint classify_form_oriented(const PartialFlag& xi, const MatrixXd& m) {
  const int d = xi.d();
  const double scale = spectral_norm(m);
  PositionFingerprint fp;
  fp.family = Family::QuadForm;
  fp.margin = std::numeric_limits<double>::infinity();

  const VectorXd v = xi.frame.col(0);
  const double on_line = v.dot(m * v);
  const Decision iso = threshold_decision(std::abs(on_line), scale);
  fp.values.push_back(iso.above ? (on_line > 0 ? 1 : -1) : 0);
  fp.margin = std::min(fp.margin, iso.margin);

  const MatrixXd w = xi.subspace(d - 1);
  const linalg::Signature sig = linalg::signature_with_margin(w.transpose() * m * w, kRankTol, scale);
  fp.values.push_back(sig.positives);
  fp.values.push_back(sig.zeros);
  fp.values.push_back(sig.negatives);
  fp.margin = std::min(fp.margin, sig.margin);

  const Eigen::RowVectorXd pairing = v.transpose() * m * w;
  const Decision pr = threshold_decision(pairing.norm(), scale);
  fp.values.push_back(pr.above ? 1 : 0);
  fp.margin = std::min(fp.margin, pr.margin);
  return fp;
}

}  // namespace

PositionFingerprint classify_flag_form(const PartialFlag& xi, const QuadraticForm& x) {
  const int d = xi.d();
  const weyl::DimSet ends{1, d - 1};
  const bool supported = xi.dims == ends || (d == 3 && xi.dims == weyl::full_dim_set(3));
  if (!supported)
    throw std::invalid_argument(
        "classify_flag_form: unsupported (theta, d); only theta = {1, d-1} and full flags at d = 3");
  if (x.matrix.rows() != d) throw std::invalid_argument("classify_flag_form: dimension mismatch");

  PositionFingerprint fp = classify_form_oriented(xi, x.matrix);
  if (x.p == x.q) {
    // x and -x are the same point of the space of forms up to scale; pick the
    // lexicographically smaller invariant vector.
    PositionFingerprint neg = classify_form_oriented(xi, -x.matrix);
    if (neg.values < fp.values) fp = neg;
  }
  finalize(fp);
  return fp;
}

PositionFingerprint classify_group_manifold(const PartialFlag& xi_left,
                                            const PartialFlag& xi_right,
                                            const GroupManifoldPoint& g) {
  PositionFingerprint fp = classify_flag_flag(xi_left, translate_flag(g.g0, xi_right));
  fp.family = Family::GroupManifold;
  return fp;
}

PositionFingerprint classify_line_hpq(const VectorXd& isotropic_line, const NegativeLine& x) {
  const int d = static_cast<int>(isotropic_line.size());
  if (x.v.size() != d) throw std::invalid_argument("classify_line_hpq: dimension mismatch");
  const MatrixXd qmat = pq_form_matrix(x.p, x.q);
  const double self = std::abs(isotropic_line.dot(qmat * isotropic_line));
  if (self > 1e-6 * isotropic_line.squaredNorm())
    throw std::invalid_argument("classify_line_hpq: line is not isotropic");
  const double val = std::abs(isotropic_line.dot(qmat * x.v));
  const Decision dec = threshold_decision(val, isotropic_line.norm() * x.v.norm());
  PositionFingerprint fp;
  fp.family = Family::PseudoHyp;
  fp.values.push_back(dec.above ? 0 : 1);  // 1 = incident (x in the hyperplane)
  fp.margin = dec.margin;
  finalize(fp);
  return fp;
}

PositionFingerprint classify(const FamilySpec& spec, const SpacePoint& x) {
  switch (spec.family) {
    case Family::FlagFlag:
      return classify_flag_flag(standard_flag(spec.theta, spec.d), std::get<FlagPoint>(x).flag);
    case Family::Complementary:
      return classify_flag_pair(standard_flag(spec.theta, spec.d),
                                std::get<ComplementaryPair>(x));
    case Family::QuadForm:
      return classify_flag_form(standard_flag(spec.theta, spec.d), std::get<QuadraticForm>(x));
    case Family::GroupManifold:
      return classify_group_manifold(standard_flag(spec.theta, spec.d),
                                     standard_flag(spec.theta_right, spec.d),
                                     std::get<GroupManifoldPoint>(x));
    case Family::PseudoHyp: {
      VectorXd l0 = VectorXd::Zero(spec.d);
      l0(0) = 1.0;
      l0(spec.d - 1) = 1.0;
      return classify_line_hpq(l0, std::get<NegativeLine>(x));
    }
  }
  throw std::logic_error("classify: bad enum");
}

PositionFingerprint classify_vs(const FamilySpec& spec, const std::vector<MatrixXd>& frames,
                                const SpacePoint& x) {
  switch (spec.family) {
    case Family::FlagFlag:
      return classify_flag_flag(make_flag(spec.theta, frames.at(0)), std::get<FlagPoint>(x).flag);
    case Family::Complementary:
      return classify_flag_pair(make_flag(spec.theta, frames.at(0)),
                                std::get<ComplementaryPair>(x));
    case Family::QuadForm:
      return classify_flag_form(make_flag(spec.theta, frames.at(0)), std::get<QuadraticForm>(x));
    case Family::GroupManifold:
      return classify_group_manifold(make_flag(spec.theta, frames.at(0)),
                                     make_flag(spec.theta_right, frames.at(1)),
                                     std::get<GroupManifoldPoint>(x));
    case Family::PseudoHyp:
      return classify_line_hpq(frames.at(0).col(0), std::get<NegativeLine>(x));
  }
  throw std::logic_error("classify_vs: bad enum");
}

SpacePoint act(const FamilySpec& spec, const std::vector<MatrixXd>& g, const SpacePoint& x) {
  switch (spec.family) {
    case Family::FlagFlag:
      return FlagPoint{translate_flag(g.at(0), std::get<FlagPoint>(x).flag)};
    case Family::Complementary: {
      const auto& cp = std::get<ComplementaryPair>(x);
      return ComplementaryPair{linalg::orthonormalize(g.at(0) * cp.plus_basis),
                               linalg::orthonormalize(g.at(0) * cp.minus_basis)};
    }
    case Family::QuadForm: {
      const auto& qf = std::get<QuadraticForm>(x);
      const MatrixXd gi = g.at(0).inverse();
      return make_quadratic_form(gi.transpose() * qf.matrix * gi);
    }
    case Family::GroupManifold: {
      const auto& gm = std::get<GroupManifoldPoint>(x);
      return GroupManifoldPoint{linalg::normalize_det1(g.at(0) * gm.g0 * g.at(1).inverse())};
    }
    case Family::PseudoHyp: {
      const auto& nl = std::get<NegativeLine>(x);
      return make_negative_line(g.at(0) * nl.v, nl.p, nl.q);
    }
  }
  throw std::logic_error("act: bad enum");
}

Normalized normalize_pair(const FamilySpec& spec, const SpacePoint& x) {
  Normalized out;
  out.base = base_point(spec);
  const int d = spec.d;
  switch (spec.family) {
    case Family::FlagFlag: {
      // g = frame^T sends the flag point to the standard flag.
      const MatrixXd g = std::get<FlagPoint>(x).flag.frame.transpose();
      out.k = {linalg::orthonormalize(g)};
      return out;
    }
    case Family::Complementary: {
      const auto& cp = std::get<ComplementaryPair>(x);
      MatrixXd b(d, d);
      b << cp.plus_basis, cp.minus_basis;
      if (b.determinant() < 0) b.col(d - 1) *= -1.0;  // stays inside U^-
      MatrixXd g = b.inverse();
      g *= std::pow(std::abs(g.determinant()), -1.0 / d);
      out.k = {linalg::orthonormalize(g)};
      return out;
    }
    case Family::QuadForm: {
      const auto& qf = std::get<QuadraticForm>(x);
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(qf.matrix);
      // descending order puts the p positive directions first
      VectorXd ev = es.eigenvalues().reverse();
      MatrixXd vecs = es.eigenvectors().rowwise().reverse();
      MatrixXd g = ev.cwiseAbs().cwiseSqrt().asDiagonal() * vecs.transpose();
      if (g.determinant() < 0) g.row(0) *= -1.0;  // diag sign in O(p,q) of the base form
      out.k = {linalg::orthonormalize(g)};
      return out;
    }
    case Family::GroupManifold: {
      const auto& gm = std::get<GroupManifoldPoint>(x);
      out.k = {linalg::orthonormalize(gm.g0.inverse()), MatrixXd::Identity(d, d)};
      return out;
    }
    case Family::PseudoHyp: {
      // O(p,q) element moving x to the last coordinate axis: block rotations
      // aligning the two components, then a boost killing the positive part.
      const auto& nl = std::get<NegativeLine>(x);
      const int p = nl.p, q = nl.q;
      VectorXd vp = nl.v.head(p), vq = nl.v.tail(q);
      MatrixXd k1 = MatrixXd::Identity(d, d);
      if (vp.norm() > 1e-14) {
        MatrixXd hp(p, p);
        hp.col(0) = vp.normalized();
        for (int c = 1; c < p; ++c) hp.col(c) = VectorXd::Unit(p, c - 1);
        hp = linalg::orthonormalize(hp);
        k1.topLeftCorner(p, p) = hp.transpose();  // sends vp direction to e_1
      }
      MatrixXd hq(q, q);
      hq.col(0) = vq.normalized();
      for (int c = 1; c < q; ++c) hq.col(c) = VectorXd::Unit(q, c - 1);
      hq = linalg::orthonormalize(hq);
      MatrixXd perm = MatrixXd::Zero(q, q);  // e_1 -> e_q within the block
      perm(q - 1, 0) = 1.0;
      for (int c = 1; c < q; ++c) perm(c - 1, c) = 1.0;
      k1.bottomRightCorner(q, q) = perm * hq.transpose();
      VectorXd w = k1 * nl.v;  // now w = (a, 0, ..., 0, b) with |b| > |a|
      const double a = w(0), b = w(d - 1);
      MatrixXd boost = MatrixXd::Identity(d, d);
      if (std::abs(a) > 1e-14) {
        const double t = std::atanh(-a / b);
        boost(0, 0) = std::cosh(t);
        boost(0, d - 1) = std::sinh(t);
        boost(d - 1, 0) = std::sinh(t);
        boost(d - 1, d - 1) = std::cosh(t);
      }
      out.k = {boost * k1};
      return out;
    }
  }
  throw std::logic_error("normalize_pair: bad enum");
}

Eigen::MatrixXd symmetric_power_lift(const Eigen::Matrix2d& a, int d) {
  if (d < 2) throw std::invalid_argument("symmetric_power_lift: d must be >= 2");
  const int k = d - 1;
  std::vector<double> binom(k + 1);
  binom[0] = 1.0;
  for (int j = 1; j <= k; ++j) binom[j] = binom[j - 1] * (k - j + 1) / j;

  MatrixXd s = MatrixXd::Zero(d, d);
  for (int j = 0; j <= k; ++j) {
    // coefficients of (a11 x + a21 y)^{k-j} (a12 x + a22 y)^j
    std::vector<double> poly(k + 1, 0.0);
    poly[0] = 1.0;
    int deg = 0;
    auto mul = [&](double cx, double cy) {
      std::vector<double> next(k + 1, 0.0);
      for (int t = 0; t <= deg; ++t) {
        next[t] += poly[t] * cx;
        next[t + 1] += poly[t] * cy;
      }
      poly = next;
      ++deg;
    };
    for (int t = 0; t < k - j; ++t) mul(a(0, 0), a(1, 0));
    for (int t = 0; t < j; ++t) mul(a(0, 1), a(1, 1));
    for (int i = 0; i <= k; ++i)
      s(i, j) = poly[i] * std::sqrt(binom[j]) / std::sqrt(binom[i]);
  }
  return s;
}

SpacePoint random_point(const FamilySpec& spec, linalg::Rng& rng) {
  const int d = spec.d;
  std::normal_distribution<double> g;
  switch (spec.family) {
    case Family::FlagFlag:
      return FlagPoint{make_flag(spec.theta_space, linalg::random_orthogonal(d, rng))};
    case Family::Complementary: {
      for (int attempt = 0; attempt < 64; ++attempt) {
        MatrixXd plus(d, spec.p), minus(d, spec.q);
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < spec.p; ++j) plus(i, j) = g(rng);
          for (int j = 0; j < spec.q; ++j) minus(i, j) = g(rng);
        }
        MatrixXd cat(d, d);
        cat << linalg::orthonormalize(plus), linalg::orthonormalize(minus);
        Eigen::JacobiSVD<MatrixXd> svd(cat);
        if (svd.singularValues()(d - 1) > 1e-3)
          return make_complementary_pair(plus, minus);
      }
      throw std::runtime_error("random_point: could not sample a transverse pair");
    }
    case Family::QuadForm: {
      const MatrixXd t = linalg::random_sl(d, rng);
      return make_quadratic_form(t.transpose() * pq_form_matrix(spec.p, spec.q) * t);
    }
    case Family::GroupManifold: {
      VectorXd s(d);
      for (int i = 0; i < d; ++i) s(i) = 0.7 * g(rng);
      s.array() -= s.mean();
      const MatrixXd m = linalg::random_orthogonal(d, rng) * s.array().exp().matrix().asDiagonal() *
                         linalg::random_orthogonal(d, rng);
      return make_group_manifold_point(m);
    }
    case Family::PseudoHyp: {
      for (int attempt = 0; attempt < 1024; ++attempt) {
        VectorXd v(d);
        for (int i = 0; i < d; ++i) v(i) = g(rng);
        const double val = v.head(spec.p).squaredNorm() - v.tail(spec.q).squaredNorm();
        if (val < -1e-3 * v.squaredNorm()) return make_negative_line(v, spec.p, spec.q);
      }
      throw std::runtime_error("random_point: could not sample a negative line");
    }
  }
  throw std::logic_error("random_point: bad enum");
}

Eigen::MatrixXd random_parabolic(const weyl::DimSet& theta, int d, linalg::Rng& rng) {
  std::normal_distribution<double> g;
  // Block partition of 1..d cut at every i in theta.
  std::vector<int> cuts{0};
  for (int i : theta) cuts.push_back(i);
  cuts.push_back(d);
  MatrixXd m = MatrixXd::Zero(d, d);
  for (size_t bi = 0; bi + 1 < cuts.size(); ++bi) {
    for (size_t bj = bi; bj + 1 < cuts.size(); ++bj) {
      for (int r = cuts[bi]; r < cuts[bi + 1]; ++r)
        for (int c = cuts[bj]; c < cuts[bj + 1]; ++c) m(r, c) = g(rng);
    }
  }
  double det = m.determinant();
  int guard = 0;
  while (std::abs(det) < 1e-8 && guard++ < 64) {
    for (size_t bi = 0; bi + 1 < cuts.size(); ++bi)
      for (int r = cuts[bi]; r < cuts[bi + 1]; ++r)
        for (int c = cuts[bi]; c < cuts[bi + 1]; ++c) m(r, c) = g(rng);
    det = m.determinant();
  }
  if (det < 0) m.col(0) *= -1.0;  // sign flip stays block upper-triangular
  return m * std::pow(std::abs(det), -1.0 / d);
}

double point_distance(const FamilySpec& spec, const SpacePoint& x, const SpacePoint& y) {
  switch (spec.family) {
    case Family::FlagFlag: {
      const auto& a = std::get<FlagPoint>(x).flag;
      const auto& b = std::get<FlagPoint>(y).flag;
      double dist = 0.0;
      for (int i : a.dims)
        dist = std::max(dist, linalg::subspace_distance(a.subspace(i), b.subspace(i)));
      return dist;
    }
    case Family::Complementary: {
      const auto& a = std::get<ComplementaryPair>(x);
      const auto& b = std::get<ComplementaryPair>(y);
      return std::max(linalg::subspace_distance(a.plus_basis, b.plus_basis),
                      linalg::subspace_distance(a.minus_basis, b.minus_basis));
    }
    case Family::QuadForm: {
      const auto& a = std::get<QuadraticForm>(x);
      const auto& b = std::get<QuadraticForm>(y);
      const double direct = (a.matrix - b.matrix).norm();
      const double flipped = (a.matrix + b.matrix).norm();
      return std::min(direct, flipped) / a.matrix.norm();
    }
    case Family::GroupManifold: {
      const auto& a = std::get<GroupManifoldPoint>(x);
      const auto& b = std::get<GroupManifoldPoint>(y);
      return (a.g0 - b.g0).norm() / std::sqrt(static_cast<double>(a.g0.rows()));
    }
    case Family::PseudoHyp:
      return linalg::line_distance(std::get<NegativeLine>(x).v, std::get<NegativeLine>(y).v);
  }
  throw std::logic_error("point_distance: bad enum");
}

}  // namespace anosov::spaces
