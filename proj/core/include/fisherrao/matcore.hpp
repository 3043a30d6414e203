#pragma once

// Dense linear algebra for the small symmetric and SPD matrices used
// throughout the library. Everything is row-major and double precision.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fisherrao/error.hpp"

namespace fisherrao {

using Vector = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix outer(const Vector& u, const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  Matrix transpose() const;
  Vector diag() const;
  double trace() const;
  double norm_inf() const;  // max absolute row sum
  double norm_fro() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

// tr(A B^T), the Frobenius inner product.
double frobenius_inner(const Matrix& a, const Matrix& b);

class SymMatrix {
 public:
  SymMatrix() = default;
  // Symmetrizes (A + A^T)/2 when the asymmetry is at most 1e-9 ||A||_inf,
  // throws NotSymmetric otherwise.
  explicit SymMatrix(const Matrix& a);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const Vector& d);

  std::size_t dim() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }
  operator const Matrix&() const { return m_; }

 private:
  Matrix m_;
};

class SpdMatrix {
 public:
  SpdMatrix() = default;
  // Validates by Cholesky; throws NotPositiveDefinite.
  explicit SpdMatrix(const SymMatrix& s);
  explicit SpdMatrix(const Matrix& a);
  SpdMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SpdMatrix identity(std::size_t n);
  static SpdMatrix diagonal(const Vector& d);

  std::size_t dim() const { return s_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return s_(i, j); }
  const Matrix& matrix() const { return s_.matrix(); }
  const SymMatrix& sym() const { return s_; }
  operator const Matrix&() const { return s_.matrix(); }

  const Matrix& chol() const { return l_; }
  double log_det() const;
  Vector solve(const Vector& b) const;
  Matrix solve(const Matrix& b) const;
  // L^{-1} b
  Vector whiten(const Vector& b) const;
  Matrix inverse() const;

 private:
  SymMatrix s_;
  Matrix l_;
};

struct LdlResult {
  Matrix L;  // unit lower triangular
  Vector D;
};

struct EigenDecomposition {
  Vector values;   // non-increasing
  Matrix vectors;  // column k pairs with values[k]
};

Matrix cholesky(const SymMatrix& s);
LdlResult ldl(const SymMatrix& s);
EigenDecomposition sym_eigen(const SymMatrix& s);

SpdMatrix spd_pow(const SpdMatrix& p, double t);
SpdMatrix spd_sqrt(const SpdMatrix& p);
SpdMatrix spd_inv_sqrt(const SpdMatrix& p);
SymMatrix spd_log(const SpdMatrix& p);

// Q diag(values) Q^T
Matrix reconstruct(const Matrix& q, const Vector& values);

Matrix householder_align(const Vector& v);

Matrix lower_triangular_inverse(const Matrix& l);

// Eigenvalues of A + iB through the real block matrix [[A, -B], [B, A]].
std::vector<std::complex<double>> complex_eigenvalues(const SymMatrix& a, const SymMatrix& b);
std::vector<std::complex<double>> complex_eigenvalues(const Matrix& a, const Matrix& b);

}  // namespace fisherrao
