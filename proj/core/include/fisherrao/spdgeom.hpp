#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fisherrao/gaussmodel.hpp"
#include "fisherrao/matcore.hpp"

namespace fisherrao {

// sqrt(sum log^2 lambda_i(P1^{-1} P2)), computed on P1^{-1/2} P2 P1^{-1/2}.
double rho_spd(const SpdMatrix& p1, const SpdMatrix& p2);

// Generalized eigenvalues of (P2, P1), non-increasing.
Vector spd_relative_eigenvalues(const SpdMatrix& p1, const SpdMatrix& p2);

// P1^{1/2} (P1^{-1/2} P2 P1^{-1/2})^t P1^{1/2}; t is not clamped.
SpdMatrix spd_geodesic(const SpdMatrix& p1, const SpdMatrix& p2, double t);

double hilbert_projective(const SpdMatrix& p1, const SpdMatrix& p2);

struct SiegelPoint {
  SymMatrix X;
  SpdMatrix Y;
};

class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}
  ComplexMatrix(const Matrix& re, const Matrix& im);

  static ComplexMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix real() const;
  Matrix imag() const;
  double max_abs() const;

  // Throws SingularFactor when a pivot vanishes.
  ComplexMatrix inverse() const;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix siegel_matrix(const SiegelPoint& z);
ComplexMatrix siegel_cross_ratio(const SiegelPoint& z1, const SiegelPoint& z2);
double siegel_distance(const SiegelPoint& z1, const SiegelPoint& z2);
SiegelPoint siegel_embed_gaussian(const Gaussian& n);

}  // namespace fisherrao
