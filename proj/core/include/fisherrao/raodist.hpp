#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fisherrao/curves.hpp"
#include "fisherrao/gaussmodel.hpp"

namespace fisherrao {

// How sample points are placed on [0, 1] for the segment sum.
//   Uniform:     t_i = i / T for i = 0..T (T segments, ends exactly at 1).
//   Accumulated: t advances by repeated addition of 1/T while t + 1/T < 1,
//                which is the sampling loop behind the published tables.
//                In floating point it yields T or T - 1 segments and stops
//                one step short of the second endpoint in the latter case.
enum class Sampling { Uniform, Accumulated };

std::vector<double> sample_times(std::size_t T, Sampling sampling);

struct ApproxResult {
  double value = 0.0;
  CurveKind curve_kind = CurveKind::ProjectedCO;
  std::size_t T = 0;
  std::optional<double> defect;
};

struct DefectStats {
  double mean = 0.0;
  double max = 0.0;
};

struct BoundsReport {
  double co_lower = 0.0;
  double spc_upper = 0.0;
  double jeffreys_upper = 0.0;
  double mahalanobis_spd_upper = 0.0;
  std::map<CurveKind, ApproxResult> approximations;

  // Smallest approximation; nullopt when no curve was requested.
  std::optional<ApproxResult> best() const;
};

double fr_univariate(const Gaussian& n1, const Gaussian& n2);
double h_fr(double u);
double fr_same_cov(const Gaussian& n1, const Gaussian& n2);
double fr_same_cov_appendix(const Gaussian& n1, const Gaussian& n2);
double fr_same_mean(const Gaussian& n1, const Gaussian& n2);

double spc_upper_bound(const Gaussian& n1, const Gaussian& n2);
double jeffreys_upper_bound(const Gaussian& n1, const Gaussian& n2);
double mahalanobis_spd_upper_bound(const Gaussian& n1, const Gaussian& n2);

ApproxResult approx_length(const Curve& c, std::size_t T, Sampling sampling = Sampling::Uniform);

// Average over t = i/T, i = 1..T, of the distance between the SPD geodesic
// point and its projection.
double co_curve_defect(const Gaussian& n1, const Gaussian& n2, std::size_t T);
DefectStats co_curve_defect_stats(const Gaussian& n1, const Gaussian& n2, std::size_t T);

BoundsReport bounds_report(const Gaussian& n1, const Gaussian& n2, std::size_t T,
                           const std::vector<CurveKind>& kinds = standard_curve_kinds(),
                           Sampling sampling = Sampling::Uniform);

// Sum with a fixed pairwise reduction tree.
double pairwise_sum(const std::vector<double>& v);

}  // namespace fisherrao
