// Seeded property suites over random Gaussians.
#include <cmath>

#include "fisherrao_cli/bench.hpp"
#include "test_util.hpp"

namespace fisherrao {
namespace {

using testing::max_abs_diff;

Rng stream(std::uint64_t suite, std::uint64_t i) { return Rng(0xF15E).split(suite).split(i); }

TEST(Properties, LowerBoundOrdering) {
  for (std::size_t d : {1u, 2u, 3u, 5u})
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng = stream(d, i);
      const auto [a, b] = bench::scenario_pair(1, d, rng);
      const BoundsReport r = bounds_report(a, b, 100);
      for (double ub : {r.spc_upper, r.jeffreys_upper, r.mahalanobis_spd_upper}) EXPECT_LE(r.co_lower, ub + 1e-9);
      for (const auto& [k, v] : r.approximations)
        EXPECT_LE(r.co_lower, v.value + 1e-6) << "d=" << d << " i=" << i << " " << curve_kind_name(k);
    }
}

TEST(Properties, AffineInvariance) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = stream(100, i);
    const std::size_t d = 1 + i % 3;
    const Gaussian a = testing::random_gaussian(rng, d), b = testing::random_gaussian(rng, d);
    const Matrix x = testing::random_invertible(rng, d);
    const Vector s = testing::random_vector(rng, d);
    const Gaussian ta = affine_transform(a, x, s), tb = affine_transform(b, x, s);
    EXPECT_NEAR(kl(ta, tb), kl(a, b), 1e-8);
    EXPECT_NEAR(jeffreys(ta, tb), jeffreys(a, b), 1e-8);
    EXPECT_NEAR(mahalanobis(ta.mean(), tb.mean(), ta.cov()), mahalanobis(a.mean(), b.mean(), a.cov()), 1e-8);
    EXPECT_NEAR(co_distance(ta, tb), co_distance(a, b), 1e-8);
    const BoundsReport r = bounds_report(a, b, 200), tr = bounds_report(ta, tb, 200);
    EXPECT_NEAR(tr.spc_upper, r.spc_upper, 1e-8);
    EXPECT_NEAR(tr.jeffreys_upper, r.jeffreys_upper, 1e-8);
    for (const auto& [k, v] : r.approximations) EXPECT_NEAR(tr.approximations.at(k).value, v.value, 1e-8);
  }
}

TEST(Properties, KlEqualsEmbeddedKl) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = stream(101, i);
    const std::size_t d = 1 + i % 4;
    const Gaussian a = testing::random_gaussian(rng, d), b = testing::random_gaussian(rng, d);
    const Gaussian ea(Vector(d + 1, 0.0), co_embed(a).matrix), eb(Vector(d + 1, 0.0), co_embed(b).matrix);
    EXPECT_NEAR(kl(a, b), kl(ea, eb), 1e-10);
  }
}

TEST(Properties, MixtureGeodesicIsLinearInEmbedding) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = stream(102, i);
    const std::size_t d = 1 + i % 4;
    const Gaussian a = testing::random_gaussian(rng, d), b = testing::random_gaussian(rng, d);
    const Curve m(CurveKind::MixtureGeodesic, a, b);
    for (double t : {0.2, 0.5, 0.9}) {
      const Matrix lin = (1 - t) * co_embed(a).matrix.matrix() + t * co_embed(b).matrix.matrix();
      EXPECT_LT(max_abs_diff(co_embed(m.evaluate(t)).matrix, lin), 1e-10);
    }
  }
}

TEST(Properties, BregmanAndFenchelYoung) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = stream(103, i);
    const std::size_t d = 1 + i % 4;
    const Gaussian a = testing::random_gaussian(rng, d), b = testing::random_gaussian(rng, d);
    const NaturalParam ta = to_natural(a), tb = to_natural(b);
    EXPECT_NEAR(bregman_F(tb, ta), kl(a, b), 1e-9);
    EXPECT_NEAR(fenchel_young(tb, to_expectation(a)), bregman_F(tb, ta), 1e-9);
  }
}

TEST(Properties, SpdCongruenceAndInversion) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = stream(104, i);
    const std::size_t d = 1 + i % 5;
    const SpdMatrix p = testing::random_spd(rng, d), q = testing::random_spd(rng, d);
    const Matrix x = testing::random_invertible(rng, d);
    const double r = rho_spd(p, q);
    EXPECT_NEAR(rho_spd(SpdMatrix(x * p.matrix() * x.transpose()), SpdMatrix(x * q.matrix() * x.transpose())), r, 1e-9);
    EXPECT_NEAR(rho_spd(SpdMatrix(p.inverse()), SpdMatrix(q.inverse())), r, 1e-9);
  }
}

TEST(Properties, SameCovarianceTwoMethods) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = stream(105, i);
    const std::size_t d = 1 + i % 5;
    const SpdMatrix s = testing::random_spd(rng, d);
    const Gaussian a(testing::random_vector(rng, d, -3, 3), s), b(testing::random_vector(rng, d, -3, 3), s);
    EXPECT_NEAR(fr_same_cov(a, b), fr_same_cov_appendix(a, b), 1e-9) << "i=" << i;
  }
}

TEST(Properties, UnivariateGeodesicLength) {
  const auto q = bench::univariate_quartet();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double exact = fr_univariate(q[i], q[j]);
      const double approx = approx_length(Curve(CurveKind::UnivariateFR, q[i], q[j]), 10000).value;
      EXPECT_NEAR(approx / exact, 1.0, 1e-4);
    }
}

// Midpoint Riemann sum of ds^2(c(t), c'(t)) with closed-form derivatives.
double riemann_ds2(const Gaussian& a, const Gaussian& b, CurveKind kind, std::size_t T) {
  const Curve c(kind, a, b);
  const Vector dmu = b.mean() - a.mean();
  const Matrix m1 = a.cov().matrix() + Matrix::outer(a.mean(), a.mean());
  const Matrix m2 = b.cov().matrix() + Matrix::outer(b.mean(), b.mean());
  const Matrix p1 = a.cov().inverse(), p2 = b.cov().inverse();
  const Vector th1 = p1 * a.mean(), th2 = p2 * b.mean();
  std::vector<double> terms;
  for (std::size_t i = 0; i < T; ++i) {
    const double t = (i + 0.5) / static_cast<double>(T);
    const Gaussian g = c.evaluate(t);
    TangentDisplacement d;
    if (kind == CurveKind::MixtureGeodesic) {
      const Matrix ds = m2 - m1 - Matrix::outer(dmu, g.mean()) - Matrix::outer(g.mean(), dmu);
      d = {dmu, SymMatrix(ds)};
    } else {
      const Matrix& s = g.cov().matrix();
      const Matrix ds = -1.0 * (s * (p2 - p1) * s);
      // mu = Sigma theta_v, so dmu = dSigma theta_v + Sigma dtheta_v
      d = {ds * ((1 - t) * th1 + t * th2) + s * (th2 - th1), SymMatrix(ds)};
    }
    terms.push_back(fisher_ds2(g, d));
  }
  return pairwise_sum(terms) / static_cast<double>(T);
}

TEST(Properties, RiemannSumOfLineElementIsJeffreys) {
  for (std::uint64_t i = 0; i < 5; ++i) {
    Rng rng = stream(106, i);
    const std::size_t d = 1 + i % 3;
    const Gaussian a = testing::random_gaussian(rng, d), b = testing::random_gaussian(rng, d);
    const double dj = jeffreys(a, b);
    EXPECT_NEAR(riemann_ds2(a, b, CurveKind::MixtureGeodesic, 10000) / dj, 1.0, 1e-3);
    EXPECT_NEAR(riemann_ds2(a, b, CurveKind::ExponentialGeodesic, 10000) / dj, 1.0, 1e-3);
  }
}

TEST(Properties, SiegelScalarReduction) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = stream(107, i);
    const double y1 = rng.uniform(0.05, 10), y2 = rng.uniform(0.05, 10);
    const SiegelPoint a{SymMatrix{{0.0}}, SpdMatrix{{y1}}}, b{SymMatrix{{0.0}}, SpdMatrix{{y2}}};
    EXPECT_NEAR(siegel_distance(a, b), std::abs(std::log(y1 / y2)), 1e-10);
  }
}

}  // namespace
}  // namespace fisherrao
