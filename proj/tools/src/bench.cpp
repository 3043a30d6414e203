#include "fisherrao_cli/bench.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <tuple>

#include "fisherrao/embed.hpp"

namespace fisherrao::bench {

Pair example1_pair() {
  const Matrix s{{1.1, 0.9}, {0.9, 1.1}};
  return {Gaussian({-1.0, 0.0}, s), Gaussian({6.0, 3.0}, s)};
}

Pair han_park_pair() {
  return {Gaussian({0.0, 0.0}, Matrix{{1.0, 0.0}, {0.0, 0.1}}), Gaussian({1.0, 1.0}, Matrix{{0.1, 0.0}, {0.0, 1.0}})};
}

Pair strapasson_pair() { return {Gaussian::standard(2), Gaussian({0.5, 0.5}, Matrix::identity(2))}; }

Pair bivariate_pair(double shift) {
  return {Gaussian::standard(2), Gaussian({shift, 0.0}, Matrix{{1.0, -1.0}, {-1.0, 2.0}})};
}

std::array<Gaussian, 4> univariate_quartet() {
  auto n = [](double m, double sd) { return Gaussian::univariate(m, sd * sd); };
  return {n(0.0, 1.0), n(3.0, 1.0), n(2.0, 2.5), n(0.0, 2.0)};
}

double GoldenCheck::error() const {
  const double e = std::abs(actual - expected);
  return relative ? e / std::abs(expected) : e;
}

bool GoldenCheck::pass() const { return std::isfinite(actual) && error() <= tolerance; }

std::vector<GoldenCheck> run_examples_suite() {
  std::vector<GoldenCheck> out;
  auto add = [&](std::string name, double expected, double actual, double tol, bool rel) {
    out.push_back({std::move(name), expected, actual, tol, rel});
  };
  const auto [e1, e2] = example1_pair();
  const auto [h1, h2] = han_park_pair();
  const auto [s1, s2] = strapasson_pair();

  add("same-cov/example1", 5.006483034546878, fr_same_cov(e1, e2), 1e-6, false);
  add("same-cov/strapasson", 0.69994085, fr_same_cov(s1, s2), 1e-6, false);
  add("co/example1", 4.20447, co_distance(e1, e2), 1e-4, false);
  add("co/han-park", 3.0470, co_distance(h1, h2), 1e-4, false);
  add("killing/example1/kappa=2", 6.82028, killing_distance(e1, e2, 2.0), 1e-4, true);
  add("ubmah/han-park", 7.92179, mahalanobis_spd_upper_bound(h1, h2), 1e-3, true);
  add("spc/han-park", 5.4302, spc_upper_bound(h1, h2), 1e-3, true);
  add("sqrt-jeffreys/han-park", 4.3704, jeffreys_upper_bound(h1, h2), 1e-3, true);

  const std::vector<std::pair<CurveKind, double>> hp{{CurveKind::LinearLambda, 3.4496},
                                                     {CurveKind::MixtureGeodesic, 3.5775},
                                                     {CurveKind::ExponentialGeodesic, 3.7314},
                                                     {CurveKind::EmMidCurve, 3.1672},
                                                     {CurveKind::ProjectedCO, 3.1391}};
  for (const auto& [k, v] : hp)
    add("approx/han-park/" + std::string(curve_kind_name(k)) + "/T=1000", v,
        approx_length(Curve(k, h1, h2), 1000, Sampling::Accumulated).value, 2e-3, false);
  for (const auto& [T, v] : std::vector<std::pair<std::size_t, double>>{{10, 3.1530}, {100, 3.1136}, {500, 3.1362}})
    add("approx/han-park/co/T=" + std::to_string(T), v,
        approx_length(Curve(CurveKind::ProjectedCO, h1, h2), T, Sampling::Accumulated).value, 2e-3, false);

  struct SetValues {
    double shift, co, spc, jeff, lambda, m, e, em, cov;
  };
  for (const SetValues& s : {SetValues{1.0, 1.4498, 2.6072, 1.5811, 1.5068, 1.5320, 1.5456, 1.4681, 1.4673},
                             SetValues{5.0, 3.6852, 6.0392, 6.2048, 5.7319, 4.4039, 5.9205, 4.2901, 4.3786}}) {
    const auto [a, b] = bivariate_pair(s.shift);
    const std::string tag = "bivariate/shift=" + std::to_string(static_cast<int>(s.shift)) + "/";
    const BoundsReport r = bounds_report(a, b, 1000, standard_curve_kinds(), Sampling::Accumulated);
    add(tag + "co", s.co, r.co_lower, 2e-3, false);
    add(tag + "spc", s.spc, r.spc_upper, 2e-3, false);
    add(tag + "sqrt-jeffreys", s.jeff, r.jeffreys_upper, 2e-3, false);
    add(tag + "lambda", s.lambda, r.approximations.at(CurveKind::LinearLambda).value, 2e-3, false);
    add(tag + "m", s.m, r.approximations.at(CurveKind::MixtureGeodesic).value, 2e-3, false);
    add(tag + "e", s.e, r.approximations.at(CurveKind::ExponentialGeodesic).value, 2e-3, false);
    add(tag + "em", s.em, r.approximations.at(CurveKind::EmMidCurve).value, 2e-3, false);
    add(tag + "approx-co", s.cov, r.approximations.at(CurveKind::ProjectedCO).value, 2e-3, false);
  }

  const DefectStats ds = co_curve_defect_stats(e1, e2, 1000);
  add("co-defect/example1/mean", 0.61791, ds.mean, 1e-3, true);
  add("co-defect/example1/max", 1.00685, ds.max, 1e-3, true);

  const auto q = univariate_quartet();
  const std::vector<std::tuple<int, int, double>> fig{{0, 1, 2.6124}, {2, 3, 0.9317}, {0, 3, 0.9803},
                                                      {1, 2, 1.4225}, {1, 3, 2.1362}, {0, 2, 1.7334}};
  for (const auto& [i, j, v] : fig)
    add("univariate/N" + std::to_string(i + 1) + "-N" + std::to_string(j + 1), v, fr_univariate(q[i], q[j]), 1e-4,
        true);
  return out;
}

Gaussian random_gaussian(Rng& rng, std::size_t d) {
  Vector mu(d);
  for (double& x : mu) x = rng.uniform();
  Matrix l(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) l(i, j) = rng.uniform();
  return Gaussian(std::move(mu), SpdMatrix(l * l.transpose()));
}

Pair scenario_pair(int scenario, std::size_t d, Rng& rng, double a) {
  if (scenario == 1) {
    Gaussian n1 = random_gaussian(rng, d);
    Gaussian n2 = random_gaussian(rng, d);
    return {std::move(n1), std::move(n2)};
  }
  if (scenario != 2) throw Error(ErrorCode::InvalidArgument, "scenario must be 1 or 2");
  Vector mu(d), u(d);
  for (double& x : mu) x = rng.uniform(0.0, a);
  for (double& x : u) x = rng.uniform(0.0, a);
  return {Gaussian::standard(d), Gaussian(std::move(mu), SpdMatrix::diagonal(u))};
}

Rng trial_rng(std::uint64_t seed, int scenario, std::size_t d, std::size_t trial) {
  return Rng(seed).split(static_cast<std::uint64_t>(scenario) * 1000 + d).split(trial);
}

KappaRow run_kappa(int scenario, std::size_t d, const KappaOptions& opt) {
  const std::vector<CurveKind>& kinds = standard_curve_kinds();
  std::vector<std::vector<double>> kappa(opt.trials, std::vector<double>(kinds.size(), 0.0));

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < opt.trials; t += step) {
      Rng rng = trial_rng(opt.seed, scenario, d, t);
      const auto [n1, n2] = scenario_pair(scenario, d, rng, opt.a);
      const double lower = co_distance(n1, n2);
      for (std::size_t k = 0; k < kinds.size(); ++k)
        kappa[t][k] = approx_length(Curve(kinds[k], n1, n2), opt.T, opt.sampling).value / lower;
    }
  };
  unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(1, opt.trials)));
  if (nthreads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    for (unsigned w = 0; w < nthreads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, nthreads);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  KappaRow row{scenario, d, opt.trials, {}};
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    std::vector<double> col(opt.trials);
    for (std::size_t t = 0; t < opt.trials; ++t) col[t] = kappa[t][k];
    row.mean_kappa[kinds[k]] = opt.trials ? pairwise_sum(col) / static_cast<double>(opt.trials) : 0.0;
  }
  return row;
}

std::vector<OrderingCheck> kappa_orderings(const std::vector<KappaRow>& rows) {
  std::vector<OrderingCheck> out;
  for (const KappaRow& r : rows) {
    const double co = r.mean_kappa.at(CurveKind::ProjectedCO);
    const std::string tag = "scenario" + std::to_string(r.scenario) + "/d=" + std::to_string(r.d) + "/";
    if (r.scenario == 1 && r.d <= 5) {
      out.push_back({tag + "kappa_co<=kappa_lambda", co <= r.mean_kappa.at(CurveKind::LinearLambda)});
      out.push_back({tag + "kappa_co<=kappa_e", co <= r.mean_kappa.at(CurveKind::ExponentialGeodesic)});
    }
    if (r.scenario == 2 && r.d == 20)
      out.push_back({tag + "kappa_m<kappa_co", r.mean_kappa.at(CurveKind::MixtureGeodesic) < co});
  }
  return out;
}

std::vector<TSweepRow> run_tsweep(std::size_t t_min, std::size_t t_max) {
  const auto [h1, h2] = han_park_pair();
  const Curve c(CurveKind::ProjectedCO, h1, h2);
  std::vector<TSweepRow> out;
  for (std::size_t T = std::max<std::size_t>(1, t_min); T <= t_max; ++T)
    out.push_back({T, approx_length(c, T, Sampling::Uniform).value, approx_length(c, T, Sampling::Accumulated).value});
  return out;
}

}  // namespace fisherrao::bench
