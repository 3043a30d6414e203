#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fisherrao/gaussmodel.hpp"
#include "fisherrao/matcore.hpp"

namespace fisherrao {

struct BallResult {
  Gaussian center;
  SpdMatrix center_spd;  // C_T before projection
  double radius = 0.0;   // max rho_CO(center, N_i)
  double projection_gap = 0.0;
};

struct KCenterResult {
  std::vector<std::size_t> center_indices;
  std::vector<Gaussian> centers;
  std::vector<std::size_t> assignment;  // index into centers
  double radius = 0.0;
};

// C_1 = P_1, C_{t+1} = gamma(C_t, P_f; 1/(t+1)) toward the farthest point;
// returns C_T. Ties go to the lowest index.
SpdMatrix rieseb_spd(const std::vector<SpdMatrix>& points, std::size_t T);
double max_rho_spd(const SpdMatrix& c, const std::vector<SpdMatrix>& points);

BallResult fr_circumcenter(const std::vector<Gaussian>& gaussians, std::size_t T);

// Exact smallest enclosing ball when every Gaussian shares one covariance,
// with the center constrained to that covariance: the Euclidean minimum
// enclosing ball of the whitened means.
BallResult same_cov_circumcenter(const std::vector<Gaussian>& gaussians);

struct EuclideanBall {
  Vector center;
  double radius = 0.0;
};

EuclideanBall min_enclosing_ball(const std::vector<Vector>& points);

// Greedy farthest-first traversal under rho_CO. Without a seed the first
// center is index 0; with a seed it is drawn from the library RNG.
KCenterResult k_center(const std::vector<Gaussian>& gaussians, std::size_t k,
                       std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace fisherrao
