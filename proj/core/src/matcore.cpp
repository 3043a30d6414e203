#include "fisherrao/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

namespace fisherrao {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidExpectationParam: return "InvalidExpectationParam";
    case ErrorCode::SingularFactor: return "SingularFactor";
    case ErrorCode::InvalidCrossRatio: return "InvalidCrossRatio";
    case ErrorCode::ProjectionOutsideModel: return "ProjectionOutsideModel";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::MeanMismatch: return "MeanMismatch";
    case ErrorCode::CovarianceMismatch: return "CovarianceMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

void require_square(const Matrix& a) {
  if (!a.square() || a.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "expected a non-empty square matrix");
}

}  // namespace

// ---- Matrix ----

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::diag() const {
  Vector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

double Matrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::norm_fro() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes differ");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector operator*(double s, const Vector& a) {
  Vector c(a);
  for (double& x : c) x *= s;
  return c;
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += a.data()[k] * b.data()[k];
  return s;
}

// ---- SymMatrix / SpdMatrix ----

SymMatrix::SymMatrix(const Matrix& a) : m_(a) {
  require_square(a);
  const std::size_t n = a.rows();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  if (!(asym <= 1e-9 * a.norm_inf()) && asym != 0.0)
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric (asymmetry " + std::to_string(asym) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (a(i, j) + a(j, i));
      m_(i, j) = s;
      m_(j, i) = s;
    }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(Matrix(rows)) {}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Matrix::diagonal(d)); }

SpdMatrix::SpdMatrix(const SymMatrix& s) : s_(s), l_(cholesky(s)) {}
SpdMatrix::SpdMatrix(const Matrix& a) : SpdMatrix(SymMatrix(a)) {}
SpdMatrix::SpdMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SpdMatrix(SymMatrix(Matrix(rows))) {}

SpdMatrix SpdMatrix::identity(std::size_t n) { return SpdMatrix(Matrix::identity(n)); }
SpdMatrix SpdMatrix::diagonal(const Vector& d) { return SpdMatrix(Matrix::diagonal(d)); }

double SpdMatrix::log_det() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::log(l_(i, i));
  return 2.0 * s;
}

Vector SpdMatrix::whiten(const Vector& b) const {
  const std::size_t n = dim();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix");
  Vector y(b);
  for (std::size_t i = 0; i < n; ++i) {
    double s = y[i];
    for (std::size_t k = 0; k < i; ++k) s -= l_(i, k) * y[k];
    y[i] = s / l_(i, i);
  }
  return y;
}

Vector SpdMatrix::solve(const Vector& b) const {
  const std::size_t n = dim();
  Vector y = whiten(b);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l_(k, ii) * y[k];
    y[ii] = s / l_(ii, ii);
  }
  return y;
}

Matrix SpdMatrix::solve(const Matrix& b) const {
  if (b.rows() != dim()) throw Error(ErrorCode::DimensionMismatch, "right-hand side rows do not match");
  Matrix x(b.rows(), b.cols());
  Vector col(b.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
    const Vector sol = solve(col);
    for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = sol[i];
  }
  return x;
}

Matrix SpdMatrix::inverse() const {
  const Matrix li = lower_triangular_inverse(l_);
  const std::size_t n = dim();
  // (L L^T)^{-1} = L^{-T} L^{-1}
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = i; k < n; ++k) s += li(k, i) * li(k, j);
      inv(i, j) = s;
      inv(j, i) = s;
    }
  return inv;
}

// ---- factorizations ----

Matrix cholesky(const SymMatrix& s) {
  const std::size_t n = s.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0) || !std::isfinite(d))
      throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite (Cholesky pivot " +
                                                      std::to_string(j) + " is not positive)");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / ljj;
    }
  }
  return l;
}

LdlResult ldl(const SymMatrix& s) {
  const std::size_t n = s.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  LdlResult r{Matrix::identity(n), Vector(n, 0.0)};
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= r.L(j, k) * r.L(j, k) * r.D[k];
    if (!(d > 0.0) || !std::isfinite(d))
      throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite (LDL pivot " +
                                                      std::to_string(j) + " is not positive)");
    r.D[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= r.L(i, k) * r.L(j, k) * r.D[k];
      r.L(i, j) = v / d;
    }
  }
  return r;
}

Matrix lower_triangular_inverse(const Matrix& l) {
  require_square(l);
  const std::size_t n = l.rows();
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (l(j, j) == 0.0) throw Error(ErrorCode::SingularFactor, "singular triangular factor");
    inv(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s -= l(i, k) * inv(k, j);
      inv(i, j) = s / l(i, i);
    }
  }
  return inv;
}

// ---- eigen ----

EigenDecomposition sym_eigen(const SymMatrix& s) {
  const std::size_t n = s.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  Matrix a = s.matrix();
  Matrix v = Matrix::identity(n);
  const double tol = 1e-13 * a.norm_fro();

  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
    return std::sqrt(2.0 * sum);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
  }
  if (!converged && off_norm() > tol)
    throw Error(ErrorCode::ConvergenceFailure, "Jacobi eigensolver did not converge in 100 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenDecomposition e{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    e.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) e.vectors(i, k) = v(i, order[k]);
  }
  return e;
}

Matrix reconstruct(const Matrix& q, const Vector& values) {
  const std::size_t n = q.rows();
  if (q.cols() != values.size()) throw Error(ErrorCode::DimensionMismatch, "eigenvector count mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < values.size(); ++k) s += q(i, k) * values[k] * q(j, k);
      m(i, j) = s;
      m(j, i) = s;
    }
  return m;
}

namespace {

template <class F>
Matrix spectral(const SpdMatrix& p, F f) {
  EigenDecomposition e = sym_eigen(p.sym());
  for (double& l : e.values) {
    if (!(l > 0.0))
      throw Error(ErrorCode::NotPositiveDefinite, "matrix has a non-positive eigenvalue");
    l = f(l);
  }
  return reconstruct(e.vectors, e.values);
}

}  // namespace

SpdMatrix spd_pow(const SpdMatrix& p, double t) {
  if (t == 1.0) return p;
  return SpdMatrix(spectral(p, [t](double l) { return std::pow(l, t); }));
}

SpdMatrix spd_sqrt(const SpdMatrix& p) { return SpdMatrix(spectral(p, [](double l) { return std::sqrt(l); })); }

SpdMatrix spd_inv_sqrt(const SpdMatrix& p) {
  return SpdMatrix(spectral(p, [](double l) { return 1.0 / std::sqrt(l); }));
}

SymMatrix spd_log(const SpdMatrix& p) { return SymMatrix(spectral(p, [](double l) { return std::log(l); })); }

Matrix householder_align(const Vector& v) {
  const std::size_t n = v.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty vector");
  const double nv = norm2(v);
  if (nv == 0.0) throw Error(ErrorCode::ZeroVector, "cannot align the zero vector");
  Vector w = (1.0 / nv) * v;
  w[0] -= 1.0;
  const double ww = dot(w, w);
  if (ww == 0.0) return Matrix::identity(n);
  Matrix h = Matrix::identity(n) - (2.0 / ww) * Matrix::outer(w, w);
  // A reflection has det -1; flipping the last row restores a rotation.
  // In one dimension there is no rotation taking a negative value to |v|.
  if (n > 1)
    for (std::size_t j = 0; j < n; ++j) h(n - 1, j) = -h(n - 1, j);
  return h;
}

// ---- complex spectrum ----

std::vector<std::complex<double>> complex_eigenvalues(const Matrix& a, const Matrix& b) {
  require_square(a);
  require_same_shape(a, b);
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double aij = a(i, j), bij = b(i, j);
      m(i, j) = aij;
      m(i, j + n) = -bij;
      m(i + n, j) = bij;
      m(i + n, j + n) = aij;
    }
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, true);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "block eigenproblem did not converge");
  const Eigen::VectorXcd lam = es.eigenvalues();
  const Eigen::MatrixXcd vec = es.eigenvectors();
  const std::complex<double> I(0.0, 1.0);

  // An eigenvector (x; y) of the block matrix belongs to A + iB when y = -i x,
  // to A - iB when y = i x. P sends the first family to 2x and kills the second.
  Eigen::MatrixXcd proj(n, 2 * n);
  std::vector<double> score(2 * n);
  for (Eigen::Index k = 0; k < 2 * n; ++k) {
    const Eigen::VectorXcd x = vec.col(k).head(n), y = vec.col(k).tail(n);
    proj.col(k) = x + I * y;
    const double p = proj.col(k).squaredNorm(), q = (x - I * y).squaredNorm();
    score[k] = p / (p + q);
  }

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double tol = 1e-8 * scale;
  std::vector<Eigen::Index> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    if (lam[x].real() != lam[y].real()) return lam[x].real() < lam[y].real();
    return lam[x].imag() < lam[y].imag();
  });

  // Cluster equal eigenvalues; the multiplicity inside A + iB is the rank of
  // the projected eigenvectors of the cluster.
  std::vector<std::vector<Eigen::Index>> clusters;
  std::vector<bool> used(2 * n, false);
  for (Eigen::Index s = 0; s < 2 * n; ++s) {
    const Eigen::Index k = order[s];
    if (used[k]) continue;
    std::vector<Eigen::Index> c{k};
    used[k] = true;
    for (Eigen::Index t = s + 1; t < 2 * n; ++t) {
      const Eigen::Index j = order[t];
      if (!used[j] && std::abs(lam[j] - lam[k]) <= tol) {
        c.push_back(j);
        used[j] = true;
      }
    }
    clusters.push_back(std::move(c));
  }

  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (const auto& c : clusters) {
    Eigen::MatrixXcd sub(n, static_cast<Eigen::Index>(c.size()));
    std::complex<double> mean(0.0, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      sub.col(static_cast<Eigen::Index>(k)) = proj.col(c[k]) / std::max(proj.col(c[k]).norm(), 1e-300);
      mean += lam[c[k]];
    }
    mean /= static_cast<double>(c.size());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sub);
    const auto sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv[k] > 1e-6 * std::max(1.0, sv[0]) && sv[0] > 1e-6) ++rank;
    for (Eigen::Index k = 0; k < rank; ++k) out.push_back(mean);
  }

  if (static_cast<Eigen::Index>(out.size()) != n) {
    // Fall back to the per-vector score when the cluster ranks do not add up.
    std::vector<Eigen::Index> idx(2 * n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index x, Eigen::Index y) { return score[x] > score[y]; });
    out.clear();
    for (Eigen::Index k = 0; k < n; ++k) out.push_back(lam[idx[k]]);
  }

  std::sort(out.begin(), out.end(), [](const std::complex<double>& x, const std::complex<double>& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return out;
}

std::vector<std::complex<double>> complex_eigenvalues(const SymMatrix& a, const SymMatrix& b) {
  return complex_eigenvalues(a.matrix(), b.matrix());
}

}  // namespace fisherrao
