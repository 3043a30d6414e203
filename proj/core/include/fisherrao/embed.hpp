#pragma once

#include "fisherrao/gaussmodel.hpp"
#include "fisherrao/matcore.hpp"

namespace fisherrao {

struct EmbeddedGaussian {
  SpdMatrix matrix;  // (d+1) x (d+1)
  double beta = 1.0;
};

struct Projection {
  EmbeddedGaussian projected;  // beta == 1
  double defect = 0.0;         // |log beta| / sqrt(2)
};

// [[Sigma + beta mu mu^T, beta mu], [beta mu^T, beta]]
EmbeddedGaussian co_embed(const Gaussian& n, double beta = 1.0);
Gaussian co_inverse(const EmbeddedGaussian& p);
Projection co_project(const SpdMatrix& p);

double co_distance(const Gaussian& n1, const Gaussian& n2);
double co_same_cov(double delta);

// |Sigma|^{-1/(d+1)} f(mu, Sigma), unit determinant.
SpdMatrix sspd_embed(const Gaussian& n);
double killing_distance(const Gaussian& n1, const Gaussian& n2, double kappa);
double killing_same_mean(const Gaussian& n1, const Gaussian& n2, double kappa);

double arccosh_stable(double x);

}  // namespace fisherrao
