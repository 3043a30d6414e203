#pragma once

#include <cstddef>

#include "fisherrao/matcore.hpp"

namespace fisherrao {

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Vector mean, SpdMatrix cov);
  Gaussian(Vector mean, const Matrix& cov);

  // d = 1 convenience: N(mean, variance)
  static Gaussian univariate(double mean, double variance);
  static Gaussian standard(std::size_t d);

  std::size_t dim() const { return mean_.size(); }
  const Vector& mean() const { return mean_; }
  const SpdMatrix& cov() const { return cov_; }

 private:
  Vector mean_;
  SpdMatrix cov_;
};

struct NaturalParam {
  Vector theta_v;    // Sigma^{-1} mu
  SpdMatrix theta_M; // Sigma^{-1} / 2
};

struct ExpectationParam {
  Vector eta_v;     // mu
  SymMatrix eta_M;  // -Sigma - mu mu^T
};

struct TangentDisplacement {
  Vector d_mu;
  SymMatrix d_sigma;
};

NaturalParam to_natural(const Gaussian& n);
Gaussian from_natural(const NaturalParam& theta);
ExpectationParam to_expectation(const Gaussian& n);
Gaussian from_expectation(const ExpectationParam& eta);

// <theta, eta> = theta_v . eta_v + tr(theta_M eta_M)
double inner(const NaturalParam& theta, const ExpectationParam& eta);

double log_normalizer(const NaturalParam& theta);
double dual_potential(const ExpectationParam& eta);
ExpectationParam log_normalizer_gradient(const NaturalParam& theta);

double bregman_F(const NaturalParam& theta1, const NaturalParam& theta2);
double fenchel_young(const NaturalParam& theta1, const ExpectationParam& eta2);

double kl(const Gaussian& n1, const Gaussian& n2);
double jeffreys(const Gaussian& n1, const Gaussian& n2);
double mahalanobis(const Vector& mu1, const Vector& mu2, const SpdMatrix& sigma);
double fisher_ds2(const Gaussian& n, const TangentDisplacement& d);

// Image of N under x -> A x + a.
Gaussian affine_transform(const Gaussian& n, const Matrix& a, const Vector& shift);

void require_same_dim(const Gaussian& n1, const Gaussian& n2);

// Entrywise agreement within rel * max(1, |largest entry|).
bool means_equal(const Vector& a, const Vector& b, double rel = 1e-12);
bool covariances_equal(const SpdMatrix& a, const SpdMatrix& b, double rel = 1e-12);

}  // namespace fisherrao
