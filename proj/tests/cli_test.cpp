#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fisherrao_cli/cli.hpp"
#include "test_util.hpp"

namespace fisherrao::cli {
namespace {

const char* kEx1 =
    R"({"pairs":[{"n1":{"mean":[-1,0],"cov":[[1.1,0.9],[0.9,1.1]]},"n2":{"mean":[6,3],"cov":[[1.1,0.9],[0.9,1.1]]}}]})";
const char* kHanPark =
    R"({"pairs":[{"n1":{"mean":[0,0],"cov":[[1,0],[0,0.1]]},"n2":{"mean":[1,1],"cov":[[0.1,0],[0,1]]}}]})";
const char* kUnivariatePair =
    R"({"pairs":[{"n1":{"mean":[0],"cov":[[1]]},"n2":{"mean":[3],"cov":[[1]]}}]})";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

void expect_error(const CliRun& r, int code) {
  EXPECT_EQ(r.code, code) << r.err;
  EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliDist, PublishedValues) {
  const CliRun a = run({"dist", kEx1, "--method", "same-cov"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(parse(a)["method"], "same-cov");
  EXPECT_NEAR(parse(a)["value"].get<double>(), 5.006483, 1e-6);
  const CliRun b = run({"dist", kEx1, "--method", "co"});
  EXPECT_NEAR(parse(b)["value"].get<double>(), 4.20447, 1e-5);
}

TEST(CliDist, AllMethodsRun) {
  for (const char* m : {"co", "spc", "jeffreys", "mahalanobis-spd", "killing", "hilbert", "siegel"}) {
    const CliRun r = run({"dist", kHanPark, "--method", m});
    EXPECT_EQ(r.code, 0) << m << ": " << r.err;
    EXPECT_GE(parse(r)["value"].get<double>(), 0.0);
  }
  const CliRun u = run({"dist", kUnivariatePair, "--method", "univariate"});
  EXPECT_NEAR(parse(u)["value"].get<double>(), 2.6124, 1e-4);
}

TEST(CliDist, Errors) {
  expect_error(run({"dist", "{bad json"}), kInputError);
  expect_error(run({"dist", "/nonexistent/file.json"}), kInputError);
  expect_error(run({"dist", R"({"pairs":[{"n1":{"mean":[0],"cov":[[-1]]},"n2":{"mean":[0],"cov":[[1]]}}]})"}),
               kInputError);
  expect_error(run({"dist", kHanPark, "--method", "bogus"}), kInputError);
  const CliRun r = run({"dist", kHanPark, "--method", "same-cov"});
  expect_error(r, kPreconditionError);
  EXPECT_NE(r.err.find("CovarianceMismatch"), std::string::npos);
  expect_error(run({"dist", kHanPark, "--method", "univariate"}), kPreconditionError);
  expect_error(run({}), kInputError);
}

TEST(CliDist, MultiplePairsAndCsv) {
  const std::string two =
      R"({"pairs":[{"n1":{"mean":[0],"cov":[[1]]},"n2":{"mean":[3],"cov":[[1]]}},{"n1":{"mean":[0],"cov":[[1]]},"n2":{"mean":[0],"cov":[[1]]}}]})";
  const CliRun j = run({"dist", two, "--method", "univariate"});
  ASSERT_EQ(j.code, 0);
  ASSERT_TRUE(parse(j).is_array());
  EXPECT_EQ(parse(j).size(), 2u);
  const CliRun c = run({"dist", two, "--method", "univariate", "--format", "csv"});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "pair,method,value");
}

TEST(CliApprox, Report) {
  const CliRun r = run({"approx", kHanPark, "--T", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_NEAR(j["approximations"]["co"]["value"].get<double>(), 3.1391, 2e-3);
  EXPECT_NEAR(j["co_lower"].get<double>(), 3.0470, 1e-4);
  EXPECT_EQ(j["best"]["curve"], "co");
  const CliRun t = run({"approx", kHanPark, "--curves", "co", "--T", "10"});
  const auto k = parse(t);
  EXPECT_EQ(k["approximations"].size(), 1u);
  EXPECT_NEAR(k["approximations"]["co"]["value"].get<double>(), 3.1530, 2e-3);
  // Deterministic output.
  EXPECT_EQ(run({"approx", kHanPark, "--T", "1000"}).out, r.out);
}

TEST(CliApprox, IdenticalPairIsZero) {
  const std::string same =
      R"({"pairs":[{"n1":{"mean":[1,2],"cov":[[2,0.5],[0.5,1]]},"n2":{"mean":[1,2],"cov":[[2,0.5],[0.5,1]]}}]})";
  const auto j = parse(run({"approx", same, "--T", "50"}));
  EXPECT_EQ(j["co_lower"].get<double>(), 0.0);
  for (const auto& [k, v] : j["approximations"].items()) EXPECT_NEAR(v["value"].get<double>(), 0.0, 1e-12) << k;
}

TEST(CliApprox, Errors) {
  expect_error(run({"approx", kHanPark, "--curves", "nope"}), kInputError);
  expect_error(run({"approx", kHanPark, "--T", "0"}), kInputError);
  expect_error(run({"approx", kHanPark, "--sampling", "weird"}), kInputError);
}

TEST(CliCurve, Csv) {
  const CliRun r = run({"curve", kHanPark, "--curves", "m", "--samples", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, row0, row1, extra;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(header, "t,mu_1,mu_2,sigma_11,sigma_12,sigma_22");
  EXPECT_EQ(row0, "0,0,0,1,0,0.1");
  EXPECT_EQ(row1, "1,1,1,0.1,0,1");
}

TEST(CliCurve, MixtureRowsAreLinearInEmbedding) {
  const CliRun r = run({"curve", kHanPark, "--curves", "m", "--samples", "5"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  const Gaussian a({0, 0}, Matrix::diagonal({1, 0.1})), b({1, 1}, Matrix::diagonal({0.1, 1}));
  int n = 0;
  while (std::getline(in, line)) {
    std::vector<double> v;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) v.push_back(std::stod(f));
    ASSERT_EQ(v.size(), 6u);
    const double t = v[0];
    const Gaussian g({v[1], v[2]}, Matrix{{v[3], v[4]}, {v[4], v[5]}});
    const Matrix lin = (1 - t) * co_embed(a).matrix.matrix() + t * co_embed(b).matrix.matrix();
    EXPECT_LT(testing::max_abs_diff(co_embed(g).matrix, lin), 1e-12);
    ++n;
  }
  EXPECT_EQ(n, 5);
}

TEST(CliCurve, Errors) {
  expect_error(run({"curve", kHanPark, "--curves", "univariate-fr"}), kPreconditionError);
  expect_error(run({"curve", kHanPark, "--samples", "1"}), kInputError);
}

TEST(CliSeb, SingletonAndPair) {
  const std::string one = R"({"set":[{"mean":[1,2],"cov":[[2,0.5],[0.5,1]]}]})";
  const auto s = parse(run({"seb", one, "--T", "100"}));
  EXPECT_NEAR(s["radius"].get<double>(), 0.0, 1e-10);
  EXPECT_NEAR(s["projection_gap"].get<double>(), 0.0, 1e-12);
  const CliRun p = run({"seb", kHanPark, "--T", "10000"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_NEAR(parse(p)["radius"].get<double>(), 0.5 * 3.0470, 0.05 * 3.0470);
  expect_error(run({"seb", R"({"set":[]})"}), kPreconditionError);
}

TEST(CliKCenter, SeedOnlyMovesStart) {
  std::string set = R"({"set":[)";
  for (int i = 0; i < 6; ++i) {
    if (i) set += ",";
    set += R"({"mean":[)" + std::to_string(i % 2 ? 10 + i * 0.01 : i * 0.01) + R"(,0],"cov":[[1,0],[0,1]]})";
  }
  set += "]}";
  const auto a = parse(run({"kcenter", set, "--k", "2"}));
  EXPECT_EQ(a["center_indices"][0], 0);
  const auto b = parse(run({"kcenter", set, "--k", "2", "--seed", "7"}));
  EXPECT_EQ(b["assignment"].size(), 6u);
  EXPECT_EQ(parse(run({"kcenter", set, "--k", "2", "--seed", "7"})), b);
  // seb has no seed, so two runs on the same set agree byte for byte.
  EXPECT_EQ(run({"seb", set, "--T", "50"}).out, run({"seb", set, "--T", "50"}).out);
  expect_error(run({"kcenter", set, "--k", "7"}), kPreconditionError);
}

TEST(CliBench, ExamplesExitCodeMatchesFailures) {
  const CliRun r = run({"bench", "examples", "--format", "csv"});
  const bool any_fail = r.out.find(",FAIL\n") != std::string::npos;
  EXPECT_EQ(r.code, any_fail ? kBenchFailure : kOk);
  EXPECT_NE(r.out.find("same-cov/example1"), std::string::npos);
  EXPECT_NE(r.out.find("summary:"), std::string::npos);
}

TEST(CliBench, KappaTableSmall) {
  const CliRun r = run({"bench", "kappa-table", "--scenario", "1", "--dims", "1,2", "--trials", "5", "--T", "100",
                     "--format", "csv"});
  EXPECT_TRUE(r.code == kOk || r.code == kBenchFailure) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "scenario,d,trials,kappa_lambda,kappa_m,kappa_e,kappa_em,kappa_co");
  EXPECT_EQ(run({"bench", "kappa-table", "--scenario", "1", "--dims", "1,2", "--trials", "5", "--T", "100",
                 "--format", "csv"})
                .out,
            r.out);
  EXPECT_NE(run({"bench", "kappa-table", "--scenario", "1", "--dims", "1", "--trials", "5", "--T", "100", "--seed",
                 "3", "--format", "csv"})
                .out,
            run({"bench", "kappa-table", "--scenario", "1", "--dims", "1", "--trials", "5", "--T", "100", "--format",
                 "csv"})
                .out);
}

TEST(CliBench, Tsweep) {
  const CliRun r = run({"bench", "tsweep"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j.size(), 98u);
  EXPECT_EQ(j.front()["T"], 3);
  EXPECT_EQ(j.back()["T"], 100);
}

TEST(CliOut, WritesFile) {
  const std::string path = ::testing::TempDir() + "fisherrao_cli_out.json";
  const CliRun r = run({"dist", kEx1, "--method", "co", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["value"].get<double>(), 4.20447, 1e-5);
  std::remove(path.c_str());
}

TEST(CliHelp, ExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dist"), std::string::npos);
}

}  // namespace
}  // namespace fisherrao::cli
