#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fisherrao/gaussmodel.hpp"

namespace fisherrao {

enum class CurveKind {
  LinearLambda,
  MixtureGeodesic,
  ExponentialGeodesic,
  EmMidCurve,
  ProjectedCO,
  UnivariateFR,
};

// Short names used on the command line and in reports:
// lambda, m, e, em, co, univariate-fr.
std::string_view curve_kind_name(CurveKind kind);
std::optional<CurveKind> parse_curve_kind(std::string_view name);
const std::vector<CurveKind>& standard_curve_kinds();

struct CurvePoint {
  Gaussian gaussian;
  double defect = 0.0;  // ProjectedCO only: distance from the SPD geodesic to its projection
};

// Closed-form path with evaluate(0) == first and evaluate(1) == second.
class Curve {
 public:
  Curve(CurveKind kind, Gaussian first, Gaussian second);

  CurveKind kind() const { return kind_; }
  const Gaussian& first() const { return n1_; }
  const Gaussian& second() const { return n2_; }

  Gaussian evaluate(double t) const;
  CurvePoint evaluate_point(double t) const;

  // ProjectedCO only: the SPD geodesic between the two embeddings.
  SpdMatrix spd_point(double t) const;

 private:
  CurveKind kind_;
  Gaussian n1_, n2_;
  // exponential geodesic: precisions and precision-weighted means
  Matrix prec1_, prec2_;
  Vector pm1_, pm2_;
  // projected C&O: gamma(t) = A diag(w^t) A^T
  Matrix a_;
  Vector w_;
  // univariate semicircle
  double c_ = 0.0, r_ = 0.0, theta1_ = 0.0, theta2_ = 0.0;
  bool vertical_ = false;
  // identical endpoints: the curve is the constant point
  bool constant_ = false;

  Gaussian mixture(double t) const;
  Gaussian exponential(double t) const;
};

Gaussian univariate_fr_geodesic(const Gaussian& n1, const Gaussian& n2, double t);

// Center, radius and endpoint angles of the univariate geodesic in the
// half-plane (mu / sqrt 2, sigma).
struct Semicircle {
  bool vertical = false;
  double center = 0.0;
  double radius = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

Semicircle univariate_semicircle(const Gaussian& n1, const Gaussian& n2);

}  // namespace fisherrao
