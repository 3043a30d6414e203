#include "fisherrao/spdgeom.hpp"

#include <algorithm>
#include <cmath>

namespace fisherrao {

namespace {

void require_same_dim(const SpdMatrix& a, const SpdMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "SPD matrices have different dimensions");
}

Matrix congruence(const Matrix& x, const Matrix& p) { return x * p * x.transpose(); }

}  // namespace

Vector spd_relative_eigenvalues(const SpdMatrix& p1, const SpdMatrix& p2) {
  require_same_dim(p1, p2);
  const SpdMatrix w = spd_inv_sqrt(p1);
  return sym_eigen(SymMatrix(congruence(w.matrix(), p2.matrix()))).values;
}

double rho_spd(const SpdMatrix& p1, const SpdMatrix& p2) {
  if (p1.dim() == p2.dim() && p1.matrix().data() == p2.matrix().data()) return 0.0;
  double s = 0.0;
  for (double l : spd_relative_eigenvalues(p1, p2)) {
    if (!(l > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "non-positive relative eigenvalue");
    const double g = std::log(l);
    s += g * g;
  }
  return std::sqrt(s);
}

SpdMatrix spd_geodesic(const SpdMatrix& p1, const SpdMatrix& p2, double t) {
  require_same_dim(p1, p2);
  if (t == 0.0) return p1;
  if (t == 1.0) return p2;
  const SpdMatrix h = spd_sqrt(p1);
  const SpdMatrix hi = spd_inv_sqrt(p1);
  const SpdMatrix inner = spd_pow(SpdMatrix(congruence(hi.matrix(), p2.matrix())), t);
  return SpdMatrix(congruence(h.matrix(), inner.matrix()));
}

double hilbert_projective(const SpdMatrix& p1, const SpdMatrix& p2) {
  const Vector l = spd_relative_eigenvalues(p1, p2);
  if (!(l.back() > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "non-positive relative eigenvalue");
  return std::log(l.front() / l.back());
}

// ---- complex matrices ----

ComplexMatrix::ComplexMatrix(const Matrix& re, const Matrix& im) : ComplexMatrix(re.rows()) {
  if (!re.square() || re.rows() != im.rows() || re.cols() != im.cols())
    throw Error(ErrorCode::DimensionMismatch, "real and imaginary parts differ in shape");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = {re(i, j), im(i, j)};
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix ComplexMatrix::real() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).real();
  return m;
}

Matrix ComplexMatrix::imag() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).imag();
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix ComplexMatrix::inverse() const {
  const std::size_t n = n_;
  ComplexMatrix a(*this);
  ComplexMatrix inv = identity(n);
  const double scale = std::max(max_abs(), 1e-300);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (std::abs(a(piv, c)) <= 1e-13 * scale)
      throw Error(ErrorCode::SingularFactor, "complex factor is numerically singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    const value_type d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const value_type f = a(r, c);
      if (f == value_type(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "complex matrix shapes differ");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "complex matrix shapes differ");
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

// ---- Siegel upper space ----

ComplexMatrix siegel_matrix(const SiegelPoint& z) { return ComplexMatrix(z.X.matrix(), z.Y.matrix()); }

namespace {

ComplexMatrix conj(const SiegelPoint& z) { return ComplexMatrix(z.X.matrix(), -1.0 * z.Y.matrix()); }

}  // namespace

ComplexMatrix siegel_cross_ratio(const SiegelPoint& z1, const SiegelPoint& z2) {
  if (z1.X.dim() != z2.X.dim() || z1.Y.dim() != z1.X.dim() || z2.Y.dim() != z2.X.dim())
    throw Error(ErrorCode::DimensionMismatch, "Siegel points have different dimensions");
  const ComplexMatrix a = siegel_matrix(z1), b = siegel_matrix(z2);
  const ComplexMatrix ac = conj(z1), bc = conj(z2);
  return (a - b) * (a - bc).inverse() * (ac - bc) * (ac - b).inverse();
}

double siegel_distance(const SiegelPoint& z1, const SiegelPoint& z2) {
  const ComplexMatrix r = siegel_cross_ratio(z1, z2);
  double s = 0.0;
  for (const auto& lam : complex_eigenvalues(r.real(), r.imag())) {
    if (std::abs(lam.imag()) > 1e-8)
      throw Error(ErrorCode::InvalidCrossRatio, "cross-ratio eigenvalue has a non-negligible imaginary part");
    double v = lam.real();
    if (v < -1e-8 || v >= 1.0) throw Error(ErrorCode::InvalidCrossRatio, "cross-ratio eigenvalue outside [0, 1)");
    v = std::clamp(v, 0.0, 1.0 - 1e-15);
    // log((1 + sqrt r)/(1 - sqrt r))
    const double g = 2.0 * std::atanh(std::sqrt(v));
    s += g * g;
  }
  return std::sqrt(s);
}

SiegelPoint siegel_embed_gaussian(const Gaussian& n) {
  return {SymMatrix(Matrix::outer(n.mean(), n.mean())), n.cov()};
}

}  // namespace fisherrao
