#include "fisherrao/curves.hpp"

#include <cmath>
#include <numbers>

#include "fisherrao/embed.hpp"

namespace fisherrao {

std::string_view curve_kind_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::LinearLambda: return "lambda";
    case CurveKind::MixtureGeodesic: return "m";
    case CurveKind::ExponentialGeodesic: return "e";
    case CurveKind::EmMidCurve: return "em";
    case CurveKind::ProjectedCO: return "co";
    case CurveKind::UnivariateFR: return "univariate-fr";
  }
  return "unknown";
}

std::optional<CurveKind> parse_curve_kind(std::string_view name) {
  for (CurveKind k : {CurveKind::LinearLambda, CurveKind::MixtureGeodesic, CurveKind::ExponentialGeodesic,
                      CurveKind::EmMidCurve, CurveKind::ProjectedCO, CurveKind::UnivariateFR})
    if (curve_kind_name(k) == name) return k;
  if (name == "l" || name == "linear") return CurveKind::LinearLambda;
  return std::nullopt;
}

const std::vector<CurveKind>& standard_curve_kinds() {
  static const std::vector<CurveKind> kinds{CurveKind::LinearLambda, CurveKind::MixtureGeodesic,
                                            CurveKind::ExponentialGeodesic, CurveKind::EmMidCurve,
                                            CurveKind::ProjectedCO};
  return kinds;
}

Semicircle univariate_semicircle(const Gaussian& n1, const Gaussian& n2) {
  if (n1.dim() != 1 || n2.dim() != 1)
    throw Error(ErrorCode::DimensionMismatch, "univariate geodesic needs d == 1");
  const double m1 = n1.mean()[0], m2 = n2.mean()[0];
  const double s1 = std::sqrt(n1.cov()(0, 0)), s2 = std::sqrt(n2.cov()(0, 0));
  Semicircle sc;
  if (m1 == m2) {
    sc.vertical = true;
    return sc;
  }
  const double x1 = m1 / std::numbers::sqrt2, x2 = m2 / std::numbers::sqrt2;
  sc.center = (0.5 * (m2 * m2 - m1 * m1) + s2 * s2 - s1 * s1) / (std::numbers::sqrt2 * (m2 - m1));
  sc.radius = std::hypot(x1 - sc.center, s1);
  auto angle = [&](double x, double s) {
    if (x == sc.center) return std::numbers::pi / 2.0;
    double th = std::atan(s / (x - sc.center));
    if (th < 0.0) th += std::numbers::pi;
    return th;
  };
  sc.theta1 = angle(x1, s1);
  sc.theta2 = angle(x2, s2);
  return sc;
}

Gaussian univariate_fr_geodesic(const Gaussian& n1, const Gaussian& n2, double t) {
  return Curve(CurveKind::UnivariateFR, n1, n2).evaluate(t);
}

Curve::Curve(CurveKind kind, Gaussian first, Gaussian second)
    : kind_(kind), n1_(std::move(first)), n2_(std::move(second)) {
  require_same_dim(n1_, n2_);
  switch (kind_) {
    case CurveKind::ExponentialGeodesic:
    case CurveKind::EmMidCurve:
      prec1_ = n1_.cov().inverse();
      prec2_ = n2_.cov().inverse();
      pm1_ = prec1_ * n1_.mean();
      pm2_ = prec2_ * n2_.mean();
      break;
    case CurveKind::ProjectedCO: {
      const SpdMatrix p1 = co_embed(n1_).matrix, p2 = co_embed(n2_).matrix;
      const SpdMatrix h = spd_sqrt(p1), hi = spd_inv_sqrt(p1);
      const EigenDecomposition e = sym_eigen(SymMatrix(hi.matrix() * p2.matrix() * hi.matrix()));
      for (double l : e.values)
        if (!(l > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "non-positive eigenvalue on the SPD geodesic");
      a_ = h.matrix() * e.vectors;
      w_ = e.values;
      break;
    }
    case CurveKind::UnivariateFR: {
      const Semicircle sc = univariate_semicircle(n1_, n2_);
      vertical_ = sc.vertical;
      c_ = sc.center;
      r_ = sc.radius;
      theta1_ = sc.theta1;
      theta2_ = sc.theta2;
      break;
    }
    default:
      break;
  }
  constant_ = n1_.mean() == n2_.mean() && n1_.cov().matrix().data() == n2_.cov().matrix().data();
}

Gaussian Curve::mixture(double t) const {
  const Vector& m1 = n1_.mean();
  const Vector& m2 = n2_.mean();
  const Vector mu = (1.0 - t) * m1 + t * m2;
  Matrix s = (1.0 - t) * n1_.cov().matrix() + t * n2_.cov().matrix();
  s += (1.0 - t) * Matrix::outer(m1, m1) + t * Matrix::outer(m2, m2);
  s -= Matrix::outer(mu, mu);
  return Gaussian(mu, SpdMatrix(s));
}

Gaussian Curve::exponential(double t) const {
  const SpdMatrix prec((1.0 - t) * prec1_ + t * prec2_);
  const Vector b = (1.0 - t) * pm1_ + t * pm2_;
  return Gaussian(prec.solve(b), SpdMatrix(prec.inverse()));
}

SpdMatrix Curve::spd_point(double t) const {
  if (kind_ != CurveKind::ProjectedCO)
    throw Error(ErrorCode::InvalidArgument, "spd_point is defined for the projected C&O curve only");
  if (constant_) return co_embed(n1_).matrix;
  Vector wt(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) wt[i] = std::pow(w_[i], t);
  return SpdMatrix(reconstruct(a_, wt));
}

CurvePoint Curve::evaluate_point(double t) const {
  if (t == 0.0) return {n1_, 0.0};
  if (t == 1.0 || constant_) return {n2_, 0.0};
  switch (kind_) {
    case CurveKind::LinearLambda: {
      const Vector mu = (1.0 - t) * n1_.mean() + t * n2_.mean();
      return {Gaussian(mu, SpdMatrix((1.0 - t) * n1_.cov().matrix() + t * n2_.cov().matrix())), 0.0};
    }
    case CurveKind::MixtureGeodesic:
      return {mixture(t), 0.0};
    case CurveKind::ExponentialGeodesic:
      return {exponential(t), 0.0};
    case CurveKind::EmMidCurve: {
      const Gaussian m = mixture(t), e = exponential(t);
      return {Gaussian(0.5 * (m.mean() + e.mean()), SpdMatrix(0.5 * (m.cov().matrix() + e.cov().matrix()))), 0.0};
    }
    case CurveKind::ProjectedCO: {
      const Projection pr = co_project(spd_point(t));
      return {co_inverse(pr.projected), pr.defect};
    }
    case CurveKind::UnivariateFR: {
      if (vertical_) {
        const double s1 = std::sqrt(n1_.cov()(0, 0)), s2 = std::sqrt(n2_.cov()(0, 0));
        const double s = (1.0 - t) * s1 + t * s2;
        return {Gaussian::univariate(n1_.mean()[0], s * s), 0.0};
      }
      const double th = (1.0 - t) * theta1_ + t * theta2_;
      const double s = r_ * std::sin(th);
      return {Gaussian::univariate(std::numbers::sqrt2 * (c_ + r_ * std::cos(th)), s * s), 0.0};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown curve kind");
}

Gaussian Curve::evaluate(double t) const { return evaluate_point(t).gaussian; }

}  // namespace fisherrao
