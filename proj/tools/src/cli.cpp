#include "fisherrao_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fisherrao/fisherrao.hpp"
#include "fisherrao_cli/bench.hpp"
#include "fisherrao_cli/io.hpp"

namespace fisherrao::cli {

namespace {

const std::vector<std::string> kMethods{"co",        "spc",       "jeffreys", "mahalanobis-spd", "same-cov",
                                        "same-mean", "univariate", "killing", "hilbert",         "siegel"};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

Sampling parse_sampling(const std::string& s) {
  return s == "accumulated" ? Sampling::Accumulated : Sampling::Uniform;
}

std::vector<CurveKind> parse_curves(const std::vector<std::string>& names) {
  if (names.empty()) return standard_curve_kinds();
  std::vector<CurveKind> out;
  for (const auto& n : names) {
    const auto k = parse_curve_kind(n);
    if (!k) throw InputError("unknown curve '" + n + "'");
    if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
  }
  return out;
}

double dist_value(const std::string& method, const Gaussian& a, const Gaussian& b, double kappa) {
  if (method == "co") return co_distance(a, b);
  if (method == "spc") return spc_upper_bound(a, b);
  if (method == "jeffreys") return jeffreys_upper_bound(a, b);
  if (method == "mahalanobis-spd") return mahalanobis_spd_upper_bound(a, b);
  if (method == "same-cov") return fr_same_cov(a, b);
  if (method == "same-mean") return fr_same_mean(a, b);
  if (method == "univariate") return fr_univariate(a, b);
  if (method == "killing") return killing_distance(a, b, kappa);
  if (method == "hilbert") return hilbert_projective(co_embed(a).matrix, co_embed(b).matrix);
  if (method == "siegel") return siegel_distance(siegel_embed_gaussian(a), siegel_embed_gaussian(b));
  throw InputError("unknown method '" + method + "'");
}

// ---- commands ----

void cmd_dist(const RunConfig& cfg, std::ostream& out) {
  const auto pairs = pairs_from_json(load_input(cfg.input));
  std::vector<double> values;
  for (const auto& [a, b] : pairs) values.push_back(dist_value(cfg.method, a, b, cfg.kappa));
  if (cfg.format == "csv") {
    out << "pair,method,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << cfg.method << ',' << format_double(values[i]) << '\n';
    return;
  }
  auto record = [&](double v) {
    Json j;
    j["method"] = cfg.method;
    j["value"] = v;
    return j;
  };
  if (values.size() == 1) {
    out << record(values[0]).dump() << '\n';
  } else {
    Json arr = Json::array();
    for (double v : values) arr.push_back(record(v));
    out << arr.dump() << '\n';
  }
}

Json report_json(const BoundsReport& r, const RunConfig& cfg) {
  Json j;
  j["T"] = cfg.T;
  j["sampling"] = cfg.sampling;
  j["co_lower"] = r.co_lower;
  j["spc_upper"] = r.spc_upper;
  j["jeffreys_upper"] = r.jeffreys_upper;
  j["mahalanobis_spd_upper"] = r.mahalanobis_spd_upper;
  Json approx = Json::object();
  for (CurveKind k : parse_curves(cfg.curves)) {
    const ApproxResult& a = r.approximations.at(k);
    Json e;
    e["value"] = a.value;
    if (a.defect) e["defect"] = *a.defect;
    approx[std::string(curve_kind_name(k))] = e;
  }
  j["approximations"] = approx;
  if (const auto b = r.best()) {
    Json best;
    best["curve"] = std::string(curve_kind_name(b->curve_kind));
    best["value"] = b->value;
    j["best"] = best;
  }
  return j;
}

void cmd_approx(const RunConfig& cfg, std::ostream& out) {
  const auto pairs = pairs_from_json(load_input(cfg.input));
  const auto kinds = parse_curves(cfg.curves);
  std::vector<BoundsReport> reports;
  for (const auto& [a, b] : pairs) reports.push_back(bounds_report(a, b, cfg.T, kinds, parse_sampling(cfg.sampling)));
  if (cfg.format == "csv") {
    out << "pair,quantity,value\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << i << ",co_lower," << format_double(r.co_lower) << '\n';
      out << i << ",spc_upper," << format_double(r.spc_upper) << '\n';
      out << i << ",jeffreys_upper," << format_double(r.jeffreys_upper) << '\n';
      out << i << ",mahalanobis_spd_upper," << format_double(r.mahalanobis_spd_upper) << '\n';
      for (CurveKind k : kinds) {
        const ApproxResult& a = r.approximations.at(k);
        out << i << ",approx_" << curve_kind_name(k) << ',' << format_double(a.value) << '\n';
        if (a.defect) out << i << ",defect_" << curve_kind_name(k) << ',' << format_double(*a.defect) << '\n';
      }
    }
    return;
  }
  if (reports.size() == 1) {
    out << report_json(reports[0], cfg).dump(2) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, cfg));
    out << arr.dump(2) << '\n';
  }
}

void cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const auto pairs = pairs_from_json(load_input(cfg.input));
  if (cfg.samples < 2) throw InputError("--samples must be at least 2");
  if (cfg.curves.size() > 1) throw InputError("curve takes a single --curves kind");
  const std::string name = cfg.curves.empty() ? "co" : cfg.curves.front();
  const auto kind = parse_curve_kind(name);
  if (!kind) throw InputError("unknown curve '" + name + "'");
  const auto& [a, b] = pairs.front();
  const Curve c(*kind, a, b);
  const std::size_t d = a.dim();

  std::vector<std::pair<double, Gaussian>> rows;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
    try {
      rows.emplace_back(t, c.evaluate(t));
    } catch (const Error& e) {
      throw Error(e.code(), "curve " + name + " at t=" + format_double(t) + ": " + e.what());
    }
  }

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [t, g] : rows) {
      Json j = gaussian_to_json(g);
      j["t"] = t;
      arr.push_back(j);
    }
    out << arr.dump() << '\n';
    return;
  }
  out << 't';
  for (std::size_t i = 0; i < d; ++i) out << ",mu_" << i + 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) out << ",sigma_" << i + 1 << j + 1;
  out << '\n';
  for (const auto& [t, g] : rows) {
    out << format_double(t);
    for (double m : g.mean()) out << ',' << format_double(m);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) out << ',' << format_double(g.cov()(i, j));
    out << '\n';
  }
}

void cmd_seb(const RunConfig& cfg, std::ostream& out) {
  const auto set = set_from_json(load_input(cfg.input));
  const BallResult r = fr_circumcenter(set, cfg.T);
  if (cfg.format == "csv") {
    out << "quantity,value\n";
    out << "radius," << format_double(r.radius) << '\n';
    out << "projection_gap," << format_double(r.projection_gap) << '\n';
    for (std::size_t i = 0; i < r.center.dim(); ++i) out << "mu_" << i + 1 << ',' << format_double(r.center.mean()[i]) << '\n';
    for (std::size_t i = 0; i < r.center.dim(); ++i)
      for (std::size_t j = i; j < r.center.dim(); ++j)
        out << "sigma_" << i + 1 << j + 1 << ',' << format_double(r.center.cov()(i, j)) << '\n';
    return;
  }
  Json j;
  j["T"] = cfg.T;
  j["center"] = gaussian_to_json(r.center);
  j["center_spd"] = matrix_to_json(r.center_spd.matrix());
  j["radius"] = r.radius;
  j["projection_gap"] = r.projection_gap;
  out << j.dump(2) << '\n';
}

void cmd_kcenter(const RunConfig& cfg, std::ostream& out) {
  const auto set = set_from_json(load_input(cfg.input));
  const KCenterResult r = k_center(set, cfg.k, cfg.seed_given ? std::optional<std::uint64_t>(cfg.seed) : std::nullopt);
  if (cfg.format == "csv") {
    out << "point,center\n";
    for (std::size_t i = 0; i < r.assignment.size(); ++i) out << i << ',' << r.center_indices[r.assignment[i]] << '\n';
    return;
  }
  Json j;
  j["k"] = cfg.k;
  j["center_indices"] = r.center_indices;
  Json centers = Json::array();
  for (const auto& c : r.centers) centers.push_back(gaussian_to_json(c));
  j["centers"] = centers;
  j["assignment"] = r.assignment;
  j["radius"] = r.radius;
  out << j.dump(2) << '\n';
}

int bench_examples(const RunConfig& cfg, std::ostream& out) {
  const auto checks = bench::run_examples_suite();
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass() ? 0 : 1;
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j;
      j["check"] = c.name;
      j["expected"] = c.expected;
      j["actual"] = c.actual;
      j["tolerance"] = c.tolerance;
      j["relative"] = c.relative;
      j["status"] = c.pass() ? "pass" : "fail";
      arr.push_back(j);
    }
    Json j;
    j["checks"] = arr;
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    out << "check,expected,actual,tolerance,status\n";
    for (const auto& c : checks)
      out << c.name << ',' << format_double(c.expected) << ',' << format_double(c.actual) << ','
          << format_double(c.tolerance) << (c.relative ? " rel" : " abs") << ',' << (c.pass() ? "pass" : "FAIL") << '\n';
    out << "summary: " << checks.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed ? kBenchFailure : kOk;
}

int bench_kappa(const RunConfig& cfg, std::ostream& out) {
  bench::KappaOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.T = cfg.T;
  opt.sampling = parse_sampling(cfg.sampling);
  const std::map<int, std::vector<std::size_t>> default_dims{{1, {1, 2, 3, 4, 5}}, {2, {1, 5, 10, 11, 12, 15, 20}}};
  const std::vector<int> scenarios = cfg.scenarios.empty() ? std::vector<int>{1, 2} : cfg.scenarios;
  std::vector<bench::KappaRow> rows;
  for (int s : scenarios) {
    if (s != 1 && s != 2) throw InputError("--scenario must be 1 or 2");
    for (std::size_t d : cfg.dims.empty() ? default_dims.at(s) : cfg.dims) rows.push_back(bench::run_kappa(s, d, opt));
  }
  const auto checks = bench::kappa_orderings(rows);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;

  const auto& kinds = standard_curve_kinds();
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["scenario"] = r.scenario;
      j["d"] = r.d;
      j["trials"] = r.trials;
      for (CurveKind k : kinds) j["kappa_" + std::string(curve_kind_name(k))] = r.mean_kappa.at(k);
      arr.push_back(j);
    }
    Json jc = Json::array();
    for (const auto& c : checks) jc.push_back({{"check", c.name}, {"status", c.pass ? "pass" : "fail"}});
    Json j;
    j["seed"] = cfg.seed;
    j["T"] = cfg.T;
    j["sampling"] = cfg.sampling;
    j["rows"] = arr;
    j["checks"] = jc;
    out << j.dump(2) << '\n';
  } else {
    out << "scenario,d,trials";
    for (CurveKind k : kinds) out << ",kappa_" << curve_kind_name(k);
    out << '\n';
    for (const auto& r : rows) {
      out << r.scenario << ',' << r.d << ',' << r.trials;
      for (CurveKind k : kinds) out << ',' << format_double(r.mean_kappa.at(k));
      out << '\n';
    }
    out << "\ncheck,status\n";
    for (const auto& c : checks) out << c.name << ',' << (c.pass ? "pass" : "FAIL") << '\n';
    out << "summary: " << checks.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed ? kBenchFailure : kOk;
}

int bench_tsweep(const RunConfig& cfg, std::ostream& out) {
  const auto rows = bench::run_tsweep(3, 100);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"T", r.T}, {"uniform", r.uniform}, {"accumulated", r.accumulated}});
    out << arr.dump() << '\n';
  } else {
    out << "T,uniform,accumulated\n";
    for (const auto& r : rows) out << r.T << ',' << format_double(r.uniform) << ',' << format_double(r.accumulated) << '\n';
  }
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "dist") cmd_dist(cfg, out);
  else if (cfg.command == "approx") cmd_approx(cfg, out);
  else if (cfg.command == "curve") cmd_curve(cfg, out);
  else if (cfg.command == "seb") cmd_seb(cfg, out);
  else if (cfg.command == "kcenter") cmd_kcenter(cfg, out);
  else if (cfg.command == "bench") {
    if (cfg.suite == "examples") return bench_examples(cfg, out);
    if (cfg.suite == "kappa-table") return bench_kappa(cfg, out);
    return bench_tsweep(cfg, out);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fisher-Rao distances, bounds and curve approximations between normal distributions", "fisherrao"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sc->add_option("--out", cfg.out_path, "Write output to this file");
  };
  auto with_input = [&](CLI::App* sc) {
    sc->add_option("input", cfg.input, "Input JSON file, or inline JSON starting with '{'")->required();
  };
  auto with_T = [&](CLI::App* sc) {
    sc->add_option("--T", cfg.T, "Number of segments / iterations")->check(CLI::PositiveNumber);
  };
  auto with_sampling = [&](CLI::App* sc) {
    sc->add_option("--sampling", cfg.sampling, "uniform or accumulated sample placement")
        ->check(CLI::IsMember({"uniform", "accumulated"}));
  };

  CLI::App* dist = app.add_subcommand("dist", "Distance or bound for each input pair");
  with_input(dist);
  dist->add_option("--method", cfg.method, "Distance method")->check(CLI::IsMember(kMethods));
  dist->add_option("--kappa", cfg.kappa, "Killing constant")->check(CLI::PositiveNumber);
  common(dist);

  CLI::App* approx = app.add_subcommand("approx", "Bounds and curve approximations for each input pair");
  with_input(approx);
  with_T(approx);
  approx->add_option("--curves", cfg.curves, "Comma-separated curve kinds")->delimiter(',');
  with_sampling(approx);
  common(approx);

  CLI::App* curve = app.add_subcommand("curve", "Sample a curve between the first input pair");
  with_input(curve);
  curve->add_option("--curves", cfg.curves, "Curve kind")->delimiter(',');
  curve->add_option("--samples", cfg.samples, "Number of sample points (>= 2)");
  common(curve);

  CLI::App* seb = app.add_subcommand("seb", "Approximate Fisher-Rao circumcenter of a set");
  with_input(seb);
  with_T(seb);
  common(seb);

  CLI::App* kc = app.add_subcommand("kcenter", "Greedy k-center clustering of a set");
  with_input(kc);
  kc->add_option("--k", cfg.k, "Number of centers")->required()->check(CLI::PositiveNumber);
  CLI::Option* kseed = kc->add_option("--seed", cfg.seed, "Seed for the first center");
  common(kc);

  CLI::App* bench = app.add_subcommand("bench", "Reproduction benchmarks");
  bench->add_option("suite", cfg.suite, "examples, kappa-table or tsweep")
      ->required()
      ->check(CLI::IsMember({"examples", "kappa-table", "tsweep"}));
  CLI::Option* bseed = bench->add_option("--seed", cfg.seed, "Run seed");
  with_T(bench);
  bench->add_option("--trials", cfg.trials, "Trials per row (kappa-table)")->check(CLI::PositiveNumber);
  bench->add_option("--scenario", cfg.scenarios, "Scenarios to run (kappa-table)")->delimiter(',');
  bench->add_option("--dims", cfg.dims, "Dimensions to run (kappa-table)")->delimiter(',');
  with_sampling(bench);
  common(bench);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::Success&) {
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  }
  for (CLI::App* sc : app.get_subcommands()) cfg.command = sc->get_name();
  cfg.seed_given = (kseed->count() > 0) || (bseed->count() > 0);
  if (cfg.command == "curve" && curve->get_option("--format")->count() == 0) cfg.format = "csv";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open output file '" << cfg.out_path << "'\n";
      return kInputError;
    }
    sink = &file;
  }

  try {
    std::ostringstream buf;
    const int rc = dispatch(cfg, buf);
    *sink << buf.str();
    return rc;
  } catch (const InputError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << cfg.command << ": " << error_code_name(e.code()) << ": " << one_line(e.what()) << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "error: " << cfg.command << ": " << one_line(e.what()) << '\n';
    return kPreconditionError;
  }
}

}  // namespace fisherrao::cli
