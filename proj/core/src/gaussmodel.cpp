#include "fisherrao/gaussmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fisherrao {

Gaussian::Gaussian(Vector mean, SpdMatrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.empty()) throw Error(ErrorCode::DimensionMismatch, "Gaussian needs d >= 1");
  if (cov_.dim() != mean_.size())
    throw Error(ErrorCode::DimensionMismatch, "mean and covariance dimensions differ");
}

Gaussian::Gaussian(Vector mean, const Matrix& cov) : Gaussian(std::move(mean), SpdMatrix(cov)) {}

Gaussian Gaussian::univariate(double mean, double variance) {
  return Gaussian({mean}, SpdMatrix{{variance}});
}

Gaussian Gaussian::standard(std::size_t d) { return Gaussian(Vector(d, 0.0), SpdMatrix::identity(d)); }

void require_same_dim(const Gaussian& n1, const Gaussian& n2) {
  if (n1.dim() != n2.dim()) throw Error(ErrorCode::DimensionMismatch, "Gaussians have different dimensions");
}

bool means_equal(const Vector& a, const Vector& b, double rel) {
  if (a.size() != b.size()) return false;
  double scale = 1.0, diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return diff <= rel * scale;
}

bool covariances_equal(const SpdMatrix& a, const SpdMatrix& b, double rel) {
  if (a.dim() != b.dim()) return false;
  return means_equal(a.matrix().data(), b.matrix().data(), rel);
}

NaturalParam to_natural(const Gaussian& n) {
  Matrix prec = n.cov().inverse();
  return {n.cov().solve(n.mean()), SpdMatrix(0.5 * prec)};
}

Gaussian from_natural(const NaturalParam& theta) {
  if (theta.theta_v.size() != theta.theta_M.dim())
    throw Error(ErrorCode::DimensionMismatch, "natural parameter blocks differ in size");
  // Sigma = theta_M^{-1} / 2, mu = Sigma theta_v
  SpdMatrix sigma(0.5 * theta.theta_M.inverse());
  return Gaussian(sigma.matrix() * theta.theta_v, sigma);
}

ExpectationParam to_expectation(const Gaussian& n) {
  Matrix h = -1.0 * (n.cov().matrix() + Matrix::outer(n.mean(), n.mean()));
  return {n.mean(), SymMatrix(h)};
}

Gaussian from_expectation(const ExpectationParam& eta) {
  if (eta.eta_v.size() != eta.eta_M.dim())
    throw Error(ErrorCode::DimensionMismatch, "expectation parameter blocks differ in size");
  Matrix sigma = -1.0 * (eta.eta_M.matrix() + Matrix::outer(eta.eta_v, eta.eta_v));
  try {
    return Gaussian(eta.eta_v, SpdMatrix(sigma));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
    throw Error(ErrorCode::InvalidExpectationParam, "-eta_M - eta_v eta_v^T is not positive definite");
  }
}

double inner(const NaturalParam& theta, const ExpectationParam& eta) {
  return dot(theta.theta_v, eta.eta_v) + frobenius_inner(theta.theta_M.matrix(), eta.eta_M.matrix());
}

double log_normalizer(const NaturalParam& theta) {
  const double d = static_cast<double>(theta.theta_v.size());
  const Vector w = theta.theta_M.whiten(theta.theta_v);
  return 0.5 * (d * std::log(std::numbers::pi) - theta.theta_M.log_det() + 0.5 * dot(w, w));
}

ExpectationParam log_normalizer_gradient(const NaturalParam& theta) { return to_expectation(from_natural(theta)); }

double dual_potential(const ExpectationParam& eta) {
  const double d = static_cast<double>(eta.eta_v.size());
  SpdMatrix neg;
  try {
    neg = SpdMatrix(-1.0 * eta.eta_M.matrix());
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidExpectationParam, "-eta_M is not positive definite");
  }
  const Vector w = neg.whiten(eta.eta_v);
  // eta_v^T eta_M^{-1} eta_v = -|w|^2
  const double q = 1.0 - dot(w, w);
  if (!(q > 0.0)) throw Error(ErrorCode::InvalidExpectationParam, "1 + eta_v^T eta_M^{-1} eta_v is not positive");
  return -0.5 * (std::log(q) + neg.log_det() + d * std::log(2.0 * std::numbers::pi * std::numbers::e));
}

double bregman_F(const NaturalParam& theta1, const NaturalParam& theta2) {
  const ExpectationParam g2 = log_normalizer_gradient(theta2);
  const double lin = dot(theta1.theta_v - theta2.theta_v, g2.eta_v) +
                     frobenius_inner(theta1.theta_M.matrix() - theta2.theta_M.matrix(), g2.eta_M.matrix());
  return log_normalizer(theta1) - log_normalizer(theta2) - lin;
}

double fenchel_young(const NaturalParam& theta1, const ExpectationParam& eta2) {
  return log_normalizer(theta1) + dual_potential(eta2) - inner(theta1, eta2);
}

double kl(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  const double d = static_cast<double>(n1.dim());
  const Matrix s2inv_s1 = n2.cov().solve(n1.cov().matrix());
  const Vector w = n2.cov().whiten(n2.mean() - n1.mean());
  const double v = 0.5 * (s2inv_s1.trace() + dot(w, w) - d + n2.cov().log_det() - n1.cov().log_det());
  return v < 0.0 ? 0.0 : v;
}

double jeffreys(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  const std::size_t d = n1.dim();
  const Matrix p1 = n1.cov().inverse(), p2 = n2.cov().inverse();
  const Vector dm = n2.mean() - n1.mean();
  // tr((P2 S1 + P1 S2)/2 - I) + dm^T (P1 + P2)/2 dm; both terms symmetric in 1 <-> 2
  const double tr = 0.5 * (frobenius_inner(p2, n1.cov().matrix()) + frobenius_inner(p1, n2.cov().matrix())) -
              static_cast<double>(d);
  const Vector q = (p1 + p2) * dm;
  const double v = tr + 0.5 * dot(dm, q);
  return v < 0.0 ? 0.0 : v;
}

double mahalanobis(const Vector& mu1, const Vector& mu2, const SpdMatrix& sigma) {
  return norm2(sigma.whiten(mu2 - mu1));
}

double fisher_ds2(const Gaussian& n, const TangentDisplacement& disp) {
  if (disp.d_mu.size() != n.dim() || disp.d_sigma.dim() != n.dim())
    throw Error(ErrorCode::DimensionMismatch, "displacement dimension does not match the Gaussian");
  const Vector w = n.cov().whiten(disp.d_mu);
  const Matrix m = n.cov().solve(disp.d_sigma.matrix());
  // tr(M M) with M = Sigma^{-1} dSigma
  return dot(w, w) + 0.5 * frobenius_inner(m, m.transpose());
}

Gaussian affine_transform(const Gaussian& n, const Matrix& a, const Vector& shift) {
  return Gaussian(a * n.mean() + shift, SpdMatrix(a * n.cov().matrix() * a.transpose()));
}

}  // namespace fisherrao
