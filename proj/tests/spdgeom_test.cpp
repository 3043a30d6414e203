#include <cmath>

#include "test_util.hpp"

namespace fisherrao {
namespace {

using testing::max_abs_diff;
using testing::random_spd;

const double kE = std::exp(1.0);

TEST(RhoSpd, Values) {
  Rng rng(1);
  const SpdMatrix p = random_spd(rng, 3);
  EXPECT_NEAR(rho_spd(p, p), 0.0, 1e-12);
  EXPECT_NEAR(rho_spd(SpdMatrix::identity(2), SpdMatrix::diagonal({kE * kE, kE * kE})), std::sqrt(8.0), 1e-12);
}

TEST(RhoSpd, CongruenceAndInversion) {
  Rng rng(13);
  const SpdMatrix p1 = random_spd(rng, 3), p2 = random_spd(rng, 3);
  const Matrix x = testing::random_invertible(rng, 3);
  const double r = rho_spd(p1, p2);
  EXPECT_NEAR(rho_spd(SpdMatrix(x * p1.matrix() * x.transpose()), SpdMatrix(x * p2.matrix() * x.transpose())), r, 1e-9);
  EXPECT_NEAR(rho_spd(SpdMatrix(p1.inverse()), SpdMatrix(p2.inverse())), r, 1e-9);
  EXPECT_NEAR(rho_spd(p2, p1), r, 1e-10);
}

TEST(RhoSpd, TriangleInequality) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(Rng(1000).split(seed));
    const std::size_t d = 1 + rng.below(4);
    const SpdMatrix a = random_spd(rng, d), b = random_spd(rng, d), c = random_spd(rng, d);
    EXPECT_LE(rho_spd(a, c), rho_spd(a, b) + rho_spd(b, c) + 1e-9);
  }
}

TEST(SpdGeodesic, EndpointsAndCommutingCase) {
  Rng rng(17);
  const SpdMatrix p1 = random_spd(rng, 3), p2 = random_spd(rng, 3);
  EXPECT_LT(max_abs_diff(spd_geodesic(p1, p2, 0.0), p1), 1e-10);
  EXPECT_LT(max_abs_diff(spd_geodesic(p1, p2, 1.0), p2), 1e-10);
  const SpdMatrix mid = spd_geodesic(SpdMatrix::identity(2), SpdMatrix::diagonal({kE * kE, kE * kE}), 0.5);
  EXPECT_LT(max_abs_diff(mid, Matrix::diagonal({kE, kE})), 1e-12);
  const SpdMatrix m = spd_geodesic(p1, p2, 0.5);
  EXPECT_NEAR(rho_spd(p1, m), rho_spd(m, p2), 1e-9);
  EXPECT_NEAR(rho_spd(p1, m), 0.5 * rho_spd(p1, p2), 1e-9);
}

TEST(SpdGeodesic, LogDeterminantIsLinear) {
  Rng rng(18);
  const SpdMatrix p1 = random_spd(rng, 4), p2 = random_spd(rng, 4);
  for (double t : {-0.5, 0.1, 0.37, 0.9, 1.5})
    EXPECT_NEAR(spd_geodesic(p1, p2, t).log_det(), (1 - t) * p1.log_det() + t * p2.log_det(), 1e-9);
}

TEST(Hilbert, Values) {
  Rng rng(2);
  const SpdMatrix p = random_spd(rng, 3), q = random_spd(rng, 3);
  EXPECT_NEAR(hilbert_projective(p, SpdMatrix(3.0 * p.matrix())), 0.0, 1e-12);
  EXPECT_NEAR(hilbert_projective(SpdMatrix::identity(2), SpdMatrix::diagonal({1.0, kE})), 1.0, 1e-12);
  const double h = hilbert_projective(p, q);
  for (double c : {0.1, 10.0}) EXPECT_LT(std::abs(hilbert_projective(p, SpdMatrix(c * q.matrix())) - h), 1e-12);
}

SiegelPoint imaginary(double y) { return {SymMatrix{{0.0}}, SpdMatrix{{y}}}; }

TEST(SiegelCrossRatio, Values) {
  Rng rng(19);
  const Gaussian g = testing::random_gaussian(rng, 2);
  const SiegelPoint z = siegel_embed_gaussian(g);
  EXPECT_LT(siegel_cross_ratio(z, z).max_abs(), 1e-15);
  const double y1 = 0.7, y2 = 3.1;
  const auto r = siegel_cross_ratio(imaginary(y1), imaginary(y2));
  const double expected = std::pow((y1 - y2) / (y1 + y2), 2);
  EXPECT_NEAR(r(0, 0).real(), expected, 1e-14);
  EXPECT_NEAR(r(0, 0).imag(), 0.0, 1e-14);

  const Gaussian h = testing::random_gaussian(rng, 2);
  const auto cr = siegel_cross_ratio(z, siegel_embed_gaussian(h));
  for (const auto& ev : complex_eigenvalues(cr.real(), cr.imag())) EXPECT_LT(std::abs(ev.imag()), 1e-8);
}

TEST(SiegelDistance, Values) {
  EXPECT_EQ(siegel_distance(imaginary(2.0), imaginary(2.0)), 0.0);
  EXPECT_NEAR(siegel_distance(imaginary(0.4), imaginary(1.0)), std::abs(std::log(0.4)), 1e-10);
  EXPECT_NEAR(siegel_distance(imaginary(2.0), imaginary(5.0)), std::log(2.5), 1e-10);
  EXPECT_NEAR(siegel_distance(imaginary(0.3), imaginary(7.0)), rho_spd(SpdMatrix{{0.3}}, SpdMatrix{{7.0}}), 1e-10);

  Rng rng(19);
  const SiegelPoint a = siegel_embed_gaussian(testing::random_gaussian(rng, 3));
  const SiegelPoint b = siegel_embed_gaussian(testing::random_gaussian(rng, 3));
  EXPECT_NEAR(siegel_distance(a, b), siegel_distance(b, a), 1e-10);
  EXPECT_GT(siegel_distance(a, b), 0.0);
}

TEST(SiegelEmbed, Structure) {
  const SpdMatrix s{{2.0, 0.1}, {0.1, 1.0}};
  const SiegelPoint z = siegel_embed_gaussian(Gaussian({0, 0}, s));
  EXPECT_EQ(z.X.matrix().max_abs(), 0.0);
  EXPECT_EQ(max_abs_diff(z.Y, s), 0.0);
  const SiegelPoint w = siegel_embed_gaussian(Gaussian({1, 0}, Matrix::identity(2)));
  EXPECT_EQ(max_abs_diff(w.X, Matrix::diagonal({1, 0})), 0.0);
  EXPECT_EQ(max_abs_diff(w.Y, Matrix::identity(2)), 0.0);

  Rng rng(23);
  const SiegelPoint r = siegel_embed_gaussian(testing::random_gaussian(rng, 4));
  const auto ev = sym_eigen(r.X);
  // X is PSD of rank one: its nonzero singular value is the largest eigenvalue.
  EXPECT_LT(std::abs(ev.values[1]), 1e-10);
}

TEST(ComplexMatrix, InverseRejectsSingular) {
  ComplexMatrix m(2);
  m(0, 0) = {1, 1};
  m(0, 1) = {2, 2};
  m(1, 0) = {1, 1};
  m(1, 1) = {2, 2};
  EXPECT_THROW(m.inverse(), Error);
  ComplexMatrix n(2);
  n(0, 0) = {1, 2};
  n(0, 1) = {0, 1};
  n(1, 0) = {3, 0};
  n(1, 1) = {-1, 1};
  EXPECT_LT((n * n.inverse() - ComplexMatrix::identity(2)).max_abs(), 1e-14);
}

}  // namespace
}  // namespace fisherrao
