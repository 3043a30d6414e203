#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fisherrao/curves.hpp"
#include "fisherrao/gaussmodel.hpp"
#include "fisherrao/raodist.hpp"
#include "fisherrao/rng.hpp"

namespace fisherrao::bench {

using Pair = std::pair<Gaussian, Gaussian>;

// Worked examples.
Pair example1_pair();      // same covariance [[1.1, .9], [.9, 1.1]], means (-1, 0), (6, 3)
Pair han_park_pair();      // N((0,0), diag(1, .1)) vs N((1,1), diag(.1, 1))
Pair strapasson_pair();    // N(0, I) vs N((.5, .5), I)
Pair bivariate_pair(double shift);  // N(0, I) vs N((shift, 0), [[1, -1], [-1, 2]])
// N(0,1), N(3,1), N(2,2.5), N(0,2) with the second number a standard deviation.
std::array<Gaussian, 4> univariate_quartet();

struct GoldenCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool relative = false;

  double error() const;
  bool pass() const;
};

std::vector<GoldenCheck> run_examples_suite();

// Random pair recipes.
//   scenario 1: mu ~ Unif(0,1)^d, Sigma = L L^T with L lower triangular,
//               L_ij ~ Unif(0,1); n1 is drawn before n2, mean before L,
//               L filled row by row.
//   scenario 2: n1 = N(0, I); n2 mean ~ Unif(0,a)^d, then Sigma = diag(u),
//               u_i ~ Unif(0,a).
Gaussian random_gaussian(Rng& rng, std::size_t d);
Pair scenario_pair(int scenario, std::size_t d, Rng& rng, double a = 5.0);
// Stream used for trial `trial` of (scenario, d) under `seed`.
Rng trial_rng(std::uint64_t seed, int scenario, std::size_t d, std::size_t trial);

struct KappaOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t T = 1000;
  Sampling sampling = Sampling::Accumulated;
  double a = 5.0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct KappaRow {
  int scenario = 1;
  std::size_t d = 1;
  std::size_t trials = 0;
  std::map<CurveKind, double> mean_kappa;  // mean over trials of approx / rho_CO
};

KappaRow run_kappa(int scenario, std::size_t d, const KappaOptions& opt);

struct OrderingCheck {
  std::string name;
  bool pass = false;
};

// Qualitative orderings of the two published tables.
std::vector<OrderingCheck> kappa_orderings(const std::vector<KappaRow>& rows);

struct TSweepRow {
  std::size_t T;
  double uniform;
  double accumulated;
};

std::vector<TSweepRow> run_tsweep(std::size_t t_min = 3, std::size_t t_max = 100);

}  // namespace fisherrao::bench
