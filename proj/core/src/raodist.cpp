#include "fisherrao/raodist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fisherrao/embed.hpp"
#include "fisherrao/spdgeom.hpp"

namespace fisherrao {

namespace {

double pairwise(const double* p, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(p, h) + pairwise(p + h, n - h);
}

void require_same_cov(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  if (!covariances_equal(n1.cov(), n2.cov()))
    throw Error(ErrorCode::CovarianceMismatch, "same-covariance formula needs equal covariance matrices");
}

// Sample with its precision matrix, for O(d^2) Jeffreys evaluations.
struct Sample {
  Vector mean;
  Matrix cov;
  Matrix prec;
};

double jeffreys_samples(const Sample& a, const Sample& b) {
  const std::size_t d = a.mean.size();
  const Vector dm = b.mean - a.mean;
  double tr = 0.5 * (frobenius_inner(b.prec, a.cov) + frobenius_inner(a.prec, b.cov)) - static_cast<double>(d);
  double q = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) q += dm[i] * (a.prec(i, j) + b.prec(i, j)) * dm[j];
  const double v = tr + 0.5 * q;
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

double pairwise_sum(const std::vector<double>& v) { return pairwise(v.data(), v.size()); }

double fr_univariate(const Gaussian& n1, const Gaussian& n2) {
  if (n1.dim() != 1 || n2.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "univariate formula needs d == 1");
  const double m1 = n1.mean()[0], m2 = n2.mean()[0];
  const double s1 = std::sqrt(n1.cov()(0, 0)), s2 = std::sqrt(n2.cov()(0, 0));
  const double dm2 = (m1 - m2) * (m1 - m2);
  const double num = dm2 + 2.0 * (s1 - s2) * (s1 - s2);
  const double den = dm2 + 2.0 * (s1 + s2) * (s1 + s2);
  const double delta = std::sqrt(num / den);
  // sqrt(2) log((1 + D)/(1 - D))
  return 2.0 * std::numbers::sqrt2 * std::atanh(delta);
}

double h_fr(double u) {
  if (u < 0.0) throw Error(ErrorCode::NegativeInput, "Mahalanobis distance must be non-negative");
  return std::numbers::sqrt2 * arccosh_stable(1.0 + 0.25 * u * u);
}

double fr_same_cov(const Gaussian& n1, const Gaussian& n2) {
  require_same_cov(n1, n2);
  return h_fr(mahalanobis(n1.mean(), n2.mean(), n1.cov()));
}

double fr_same_cov_appendix(const Gaussian& n1, const Gaussian& n2) {
  require_same_cov(n1, n2);
  const Vector dm = n2.mean() - n1.mean();
  const double delta = norm2(dm);
  if (delta == 0.0) return 0.0;
  const std::size_t d = dm.size();
  const Matrix p = householder_align(dm);
  const Matrix m = p * n1.cov().matrix() * p.transpose();
  // M = U D U^T with U upper unitriangular, from the LDL of the index-reversed
  // matrix. U^{-1} fixes e1, so only D_11 survives the reduction.
  Matrix rev(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rev(i, j) = m(d - 1 - i, d - 1 - j);
  const LdlResult f = ldl(SymMatrix(rev));
  const double d11 = f.D[d - 1];
  return fr_univariate(Gaussian::univariate(0.0, d11), Gaussian::univariate(delta, d11));
}

double fr_same_mean(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  if (!means_equal(n1.mean(), n2.mean()))
    throw Error(ErrorCode::MeanMismatch, "same-mean formula needs equal means");
  return rho_spd(n1.cov(), n2.cov()) / std::numbers::sqrt2;
}

double spc_upper_bound(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  if (n1.mean() == n2.mean() && n1.cov().matrix().data() == n2.cov().matrix().data()) return 0.0;
  const SpdMatrix w = spd_inv_sqrt(n1.cov());
  const EigenDecomposition e = sym_eigen(SymMatrix(w.matrix() * n2.cov().matrix() * w.matrix()));
  const Vector mu = e.vectors.transpose() * (w.matrix() * (n2.mean() - n1.mean()));
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double dii = e.values[i];
    const double a = std::sqrt((1.0 + dii) * (1.0 + dii) + mu[i] * mu[i]);
    const double b = std::sqrt((1.0 - dii) * (1.0 - dii) + mu[i] * mu[i]);
    const double g = std::log((a + b) / (a - b));
    s += g * g;
  }
  return std::sqrt(2.0 * s);
}

double jeffreys_upper_bound(const Gaussian& n1, const Gaussian& n2) { return std::sqrt(jeffreys(n1, n2)); }

double mahalanobis_spd_upper_bound(const Gaussian& n1, const Gaussian& n2) {
  require_same_dim(n1, n2);
  const double rho_p = rho_spd(n1.cov(), n2.cov()) / std::numbers::sqrt2;
  const double m = std::min(mahalanobis(n1.mean(), n2.mean(), n1.cov()), mahalanobis(n1.mean(), n2.mean(), n2.cov()));
  return rho_p + m;
}

std::vector<double> sample_times(std::size_t T, Sampling sampling) {
  if (T < 1) throw Error(ErrorCode::InvalidArgument, "T must be at least 1");
  std::vector<double> ts;
  ts.reserve(T + 1);
  if (sampling == Sampling::Uniform) {
    for (std::size_t i = 0; i <= T; ++i) ts.push_back(static_cast<double>(i) / static_cast<double>(T));
    return ts;
  }
  const double dt = 1.0 / static_cast<double>(T);
  double t = 0.0;
  ts.push_back(t);
  while (t + dt < 1.0) {
    t += dt;
    ts.push_back(t);
  }
  if (ts.size() == 1) ts.push_back(1.0);
  return ts;
}

ApproxResult approx_length(const Curve& c, std::size_t T, Sampling sampling) {
  const std::vector<double> ts = sample_times(T, sampling);
  std::vector<Sample> samples;
  samples.reserve(ts.size());
  for (double t : ts) {
    try {
      const Gaussian g = c.evaluate(t);
      samples.push_back({g.mean(), g.cov().matrix(), g.cov().inverse()});
    } catch (const Error& e) {
      throw Error(e.code(), "curve " + std::string(curve_kind_name(c.kind())) + " at t=" + std::to_string(t) + ": " +
                                e.what());
    }
  }
  std::vector<double> seg(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) seg[i] = std::sqrt(jeffreys_samples(samples[i], samples[i + 1]));

  ApproxResult r;
  r.value = pairwise_sum(seg);
  r.curve_kind = c.kind();
  r.T = T;
  if (c.kind() == CurveKind::ProjectedCO) r.defect = co_curve_defect(c.first(), c.second(), T);
  return r;
}

DefectStats co_curve_defect_stats(const Gaussian& n1, const Gaussian& n2, std::size_t T) {
  if (T < 1) throw Error(ErrorCode::InvalidArgument, "T must be at least 1");
  const Curve c(CurveKind::ProjectedCO, n1, n2);
  std::vector<double> v(T);
  DefectStats s;
  for (std::size_t i = 1; i <= T; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(T);
    const double dfct = co_project(c.spd_point(t)).defect;
    v[i - 1] = dfct;
    s.max = std::max(s.max, dfct);
  }
  s.mean = pairwise_sum(v) / static_cast<double>(T);
  return s;
}

double co_curve_defect(const Gaussian& n1, const Gaussian& n2, std::size_t T) {
  return co_curve_defect_stats(n1, n2, T).mean;
}

std::optional<ApproxResult> BoundsReport::best() const {
  std::optional<ApproxResult> b;
  for (const auto& [kind, r] : approximations)
    if (!b || r.value < b->value) b = r;
  return b;
}

BoundsReport bounds_report(const Gaussian& n1, const Gaussian& n2, std::size_t T, const std::vector<CurveKind>& kinds,
                           Sampling sampling) {
  require_same_dim(n1, n2);
  BoundsReport r;
  r.co_lower = co_distance(n1, n2);
  r.spc_upper = spc_upper_bound(n1, n2);
  r.jeffreys_upper = jeffreys_upper_bound(n1, n2);
  r.mahalanobis_spd_upper = mahalanobis_spd_upper_bound(n1, n2);
  for (CurveKind k : kinds) r.approximations[k] = approx_length(Curve(k, n1, n2), T, sampling);
  return r;
}

}  // namespace fisherrao
