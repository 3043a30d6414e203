#include "fisherrao/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fisherrao/embed.hpp"
#include "fisherrao/rng.hpp"
#include "fisherrao/spdgeom.hpp"

namespace fisherrao {

double max_rho_spd(const SpdMatrix& c, const std::vector<SpdMatrix>& points) {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, rho_spd(c, p));
  return m;
}

SpdMatrix rieseb_spd(const std::vector<SpdMatrix>& points, std::size_t T) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "rieseb_spd needs at least one point");
  if (T < 1) throw Error(ErrorCode::InvalidArgument, "T must be at least 1");
  for (const auto& p : points)
    if (p.dim() != points.front().dim()) throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  SpdMatrix c = points.front();
  for (std::size_t t = 1; t < T; ++t) {
    std::size_t far = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double r = rho_spd(c, points[i]);
      if (r > best) {
        best = r;
        far = i;
      }
    }
    if (best == 0.0) break;
    c = spd_geodesic(c, points[far], 1.0 / static_cast<double>(t + 1));
  }
  return c;
}

namespace {

double max_co(const Gaussian& c, const std::vector<Gaussian>& gs) {
  double m = 0.0;
  for (const auto& g : gs) m = std::max(m, co_distance(c, g));
  return m;
}

void require_nonempty_same_dim(const std::vector<Gaussian>& gs) {
  if (gs.empty()) throw Error(ErrorCode::EmptyInput, "empty Gaussian set");
  for (const auto& g : gs) require_same_dim(gs.front(), g);
}

}  // namespace

BallResult fr_circumcenter(const std::vector<Gaussian>& gaussians, std::size_t T) {
  require_nonempty_same_dim(gaussians);
  std::vector<SpdMatrix> pts;
  pts.reserve(gaussians.size());
  for (const auto& g : gaussians) pts.push_back(co_embed(g).matrix);
  SpdMatrix ct = rieseb_spd(pts, T);
  const Projection pr = co_project(ct);
  Gaussian center = co_inverse(pr.projected);
  const double radius = max_co(center, gaussians);
  return {std::move(center), std::move(ct), radius, pr.defect};
}

// ---- Euclidean minimum enclosing ball (Welzl) ----

namespace {

struct Ball {
  Vector c;
  double r2 = -1.0;  // negative: empty
};

bool solve_linear(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= a[ii][k] * b[k];
    b[ii] = s / a[ii][ii];
  }
  return true;
}

// Smallest ball with every point of r on its boundary.
Ball boundary_ball(const std::vector<const Vector*>& r) {
  Ball b;
  if (r.empty()) return b;
  const Vector& p0 = *r[0];
  if (r.size() == 1) {
    b.c = p0;
    b.r2 = 0.0;
    return b;
  }
  const std::size_t m = r.size() - 1;
  std::vector<Vector> q(m);
  for (std::size_t j = 0; j < m; ++j) q[j] = *r[j + 1] - p0;
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  std::vector<double> rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) a[j][k] = dot(q[j], q[k]);
    rhs[j] = 0.5 * dot(q[j], q[j]);
  }
  if (!solve_linear(a, rhs)) return b;
  b.c = p0;
  for (std::size_t j = 0; j < m; ++j) b.c = b.c + rhs[j] * q[j];
  const Vector diff = b.c - p0;
  b.r2 = dot(diff, diff);
  return b;
}

bool inside(const Ball& b, const Vector& p) {
  if (b.r2 < 0.0) return false;
  const Vector diff = p - b.c;
  return dot(diff, diff) <= b.r2 * (1.0 + 1e-12) + 1e-14;
}

Ball welzl(const std::vector<const Vector*>& pts, std::size_t n, std::vector<const Vector*>& boundary,
           std::size_t dim) {
  if (n == 0 || boundary.size() == dim + 1) return boundary_ball(boundary);
  const Vector* p = pts[n - 1];
  Ball b = welzl(pts, n - 1, boundary, dim);
  if (inside(b, *p)) return b;
  boundary.push_back(p);
  b = welzl(pts, n - 1, boundary, dim);
  boundary.pop_back();
  return b;
}

}  // namespace

EuclideanBall min_enclosing_ball(const std::vector<Vector>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  // Fixed permutation keeps the expected linear running time reproducible.
  std::vector<const Vector*> pts;
  for (const auto& p : points) pts.push_back(&p);
  Rng rng(0x5EB);
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
  std::vector<const Vector*> boundary;
  const Ball b = welzl(pts, pts.size(), boundary, dim);
  if (b.r2 < 0.0) throw Error(ErrorCode::ConvergenceFailure, "degenerate enclosing ball");
  return {b.c, std::sqrt(b.r2)};
}

BallResult same_cov_circumcenter(const std::vector<Gaussian>& gaussians) {
  require_nonempty_same_dim(gaussians);
  const SpdMatrix& sigma = gaussians.front().cov();
  for (const auto& g : gaussians)
    if (!covariances_equal(g.cov(), sigma))
      throw Error(ErrorCode::CovarianceMismatch, "same_cov_circumcenter needs one shared covariance");
  std::vector<Vector> z;
  for (const auto& g : gaussians) z.push_back(sigma.whiten(g.mean()));
  const EuclideanBall eb = min_enclosing_ball(z);
  Gaussian center(sigma.chol() * eb.center, sigma);
  const double radius = max_co(center, gaussians);
  SpdMatrix spd = co_embed(center).matrix;
  return {std::move(center), std::move(spd), radius, 0.0};
}

KCenterResult k_center(const std::vector<Gaussian>& gaussians, std::size_t k, std::optional<std::uint64_t> seed) {
  require_nonempty_same_dim(gaussians);
  const std::size_t n = gaussians.size();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > n) throw Error(ErrorCode::KTooLarge, "k exceeds the number of Gaussians");

  KCenterResult r;
  std::size_t first = 0;
  if (seed) {
    Rng rng(*seed);
    first = static_cast<std::size_t>(rng.below(n));
  }
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  r.assignment.assign(n, 0);
  std::size_t next = first;
  for (std::size_t c = 0; c < k; ++c) {
    r.center_indices.push_back(next);
    r.centers.push_back(gaussians[next]);
    for (std::size_t i = 0; i < n; ++i) {
      const double dd = i == next ? 0.0 : co_distance(gaussians[next], gaussians[i]);
      if (dd < dist[i]) {
        dist[i] = dd;
        r.assignment[i] = c;
      }
    }
    std::size_t far = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (dist[i] > best) {
        best = dist[i];
        far = i;
      }
    next = far;
  }
  r.radius = *std::max_element(dist.begin(), dist.end());
  return r;
}

}  // namespace fisherrao
