#include "fisherrao/embed.hpp"

#include <cmath>
#include <numbers>

#include "fisherrao/spdgeom.hpp"

namespace fisherrao {

double arccosh_stable(double x) {
  if (x < 1.0) x = 1.0;
  return std::log(x + std::sqrt((x - 1.0) * (x + 1.0)));
}

EmbeddedGaussian co_embed(const Gaussian& n, double beta) {
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  const std::size_t d = n.dim();
  const Vector& mu = n.mean();
  Matrix p(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p(i, j) = n.cov()(i, j) + beta * mu[i] * mu[j];
    p(i, d) = beta * mu[i];
    p(d, i) = beta * mu[i];
  }
  p(d, d) = beta;
  return {SpdMatrix(p), beta};
}

namespace {

// Splits P into (beta, mu, Sigma) with Sigma = A - beta mu mu^T.
void split_embedded(const SpdMatrix& p, double& beta, Vector& mu, Matrix& sigma) {
  const std::size_t n = p.dim();
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "embedded matrix must have dimension >= 2");
  const std::size_t d = n - 1;
  beta = p(d, d);
  mu.assign(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) mu[i] = p(i, d) / beta;
  sigma = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sigma(i, j) = p(i, j) - beta * mu[i] * mu[j];
}

}  // namespace

Gaussian co_inverse(const EmbeddedGaussian& p) {
  double beta;
  Vector mu;
  Matrix sigma;
  split_embedded(p.matrix, beta, mu, sigma);
  return Gaussian(std::move(mu), SpdMatrix(sigma));
}

Projection co_project(const SpdMatrix& p) {
  double beta;
  Vector mu;
  Matrix sigma;
  split_embedded(p, beta, mu, sigma);
  try {
    const Gaussian n(std::move(mu), SpdMatrix(sigma));
    return {co_embed(n, 1.0), std::abs(std::log(beta)) / std::numbers::sqrt2};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
    throw Error(ErrorCode::ProjectionOutsideModel, "projection onto the normal submanifold: Schur complement is not positive definite");
  }
}

double co_distance(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  return rho_spd(co_embed(n1).matrix, co_embed(n2).matrix) / std::numbers::sqrt2;
}

double co_same_cov(double delta) {
  if (delta < 0.0) throw Error(ErrorCode::NegativeInput, "Mahalanobis distance must be non-negative");
  return arccosh_stable(1.0 + 0.5 * delta * delta);
}

SpdMatrix sspd_embed(const Gaussian& n) {
  const double d = static_cast<double>(n.dim());
  const double scale = std::exp(-n.cov().log_det() / (d + 1.0));
  return SpdMatrix(scale * co_embed(n).matrix.matrix());
}

double killing_distance(const Gaussian& n1, const Gaussian& n2, double kappa) {
  require_same_dim(n1, n2);
  if (!(kappa > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa must be positive");
  const SpdMatrix p1 = sspd_embed(n1), p2 = sspd_embed(n2);
  const Matrix li = lower_triangular_inverse(p1.chol());
  const SymMatrix m(li * p2.matrix() * li.transpose());
  double s = 0.0;
  for (double l : sym_eigen(m).values) {
    if (!(l > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "non-positive eigenvalue in Killing distance");
    const double g = std::log(l);
    s += g * g;
  }
  return std::sqrt(kappa * s);
}

double killing_same_mean(const Gaussian& n1, const Gaussian& n2, double kappa) {
  require_same_dim(n1, n2);
  if (!(kappa > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa must be positive");
  if (!means_equal(n1.mean(), n2.mean()))
    throw Error(ErrorCode::MeanMismatch, "killing_same_mean requires equal means");
  const double d = static_cast<double>(n1.dim());
  double sq = 0.0, sum = 0.0;
  for (double l : spd_relative_eigenvalues(n1.cov(), n2.cov())) {
    const double g = std::log(l);
    sq += g * g;
    sum += g;
  }
  const double v = sq - sum * sum / (d + 1.0);
  return std::sqrt(kappa * std::max(v, 0.0));
}

}  // namespace fisherrao
