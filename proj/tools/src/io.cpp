#include "fisherrao_cli/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fisherrao::cli {

Json load_input(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Gaussian gaussian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mean") || !j.contains("cov"))
    throw InputError("a Gaussian needs \"mean\" and \"cov\"");
  const Json& jm = j.at("mean");
  const Json& jc = j.at("cov");
  if (!jm.is_array() || jm.empty()) throw InputError("\"mean\" must be a non-empty array");
  const std::size_t d = jm.size();
  Vector mean;
  for (const auto& x : jm) mean.push_back(number(x, "mean entry"));
  if (!jc.is_array() || jc.size() != d) throw InputError("\"cov\" must be a d x d array matching \"mean\"");
  Matrix cov(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!jc[i].is_array() || jc[i].size() != d) throw InputError("\"cov\" must be a d x d array matching \"mean\"");
    for (std::size_t k = 0; k < d; ++k) cov(i, k) = number(jc[i][k], "cov entry");
  }
  try {
    return Gaussian(std::move(mean), cov);
  } catch (const Error& e) {
    throw InputError(std::string("invalid covariance: ") + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json gaussian_to_json(const Gaussian& g) {
  Json j;
  j["mean"] = g.mean();
  j["cov"] = matrix_to_json(g.cov().matrix());
  return j;
}

std::vector<std::pair<Gaussian, Gaussian>> pairs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
    throw InputError("expected {\"pairs\": [{\"n1\": .., \"n2\": ..}, ...]}");
  std::vector<std::pair<Gaussian, Gaussian>> out;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_object() || !p.contains("n1") || !p.contains("n2")) throw InputError("each pair needs \"n1\" and \"n2\"");
    out.emplace_back(gaussian_from_json(p.at("n1")), gaussian_from_json(p.at("n2")));
  }
  if (out.empty()) throw InputError("\"pairs\" is empty");
  return out;
}

std::vector<Gaussian> set_from_json(const Json& j) {
  std::vector<Gaussian> out;
  if (j.is_object() && j.contains("set")) {
    if (!j.at("set").is_array()) throw InputError("\"set\" must be an array");
    for (const auto& g : j.at("set")) out.push_back(gaussian_from_json(g));
  } else if (j.is_object() && j.contains("pairs")) {
    for (auto& [a, b] : pairs_from_json(j)) {
      out.push_back(std::move(a));
      out.push_back(std::move(b));
    }
  } else {
    throw InputError("expected {\"set\": [..]}");
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace fisherrao::cli
