#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fisherrao/gaussmodel.hpp"

namespace fisherrao::cli {

using Json = nlohmann::ordered_json;

// Malformed input: bad JSON, missing fields, non-SPD covariance. Exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument starting with '{' is parsed as inline JSON, anything else as a path.
Json load_input(const std::string& arg);

Gaussian gaussian_from_json(const Json& j);
Json gaussian_to_json(const Gaussian& g);
Json matrix_to_json(const Matrix& m);

// {"pairs":[{"n1":..,"n2":..}, ...]}
std::vector<std::pair<Gaussian, Gaussian>> pairs_from_json(const Json& j);
// {"set":[..]}; a "pairs" document is flattened as n1, n2, n1, n2, ...
std::vector<Gaussian> set_from_json(const Json& j);

// Shortest decimal form that round-trips.
std::string format_double(double x);

}  // namespace fisherrao::cli
