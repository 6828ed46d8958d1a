#include "json_codec.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fdb::cli {

namespace {

using nlohmann::ordered_json;

Rational rational_from_json(const ordered_json& value, const char* context) {
  try {
    if (value.is_string()) {
      return Rational::parse(value.get<std::string>());
    }
    if (value.is_number_integer()) {
      return Rational(static_cast<long long>(value.get<std::int64_t>()));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(context) + ": " + e.what());
  }
  throw UsageError(std::string(context) +
                   ": expected a rational string like \"-7/2\", got " + value.dump());
}

unsigned positive_key(const std::string& key) {
  if (key.empty()) {
    throw UsageError("weight spec: empty key in \"values\"");
  }
  for (char c : key) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("weight spec: key '" + key + "' is not a positive integer");
    }
  }
  const unsigned long parsed = std::stoul(key);
  if (parsed == 0) {
    throw UsageError("weight spec: keys must be >= 1");
  }
  return static_cast<unsigned>(parsed);
}

}  // namespace

nlohmann::ordered_json load_json_argument(const std::string& argument) {
  std::string payload = argument;
  const auto first = argument.find_first_not_of(" \t\r\n");
  const bool inline_json =
      first != std::string::npos && (argument[first] == '{' || argument[first] == '[');
  if (!inline_json) {
    std::ifstream file(argument);
    if (!file) {
      throw UsageError("cannot read file '" + argument + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    payload = buffer.str();
  }
  try {
    return ordered_json::parse(payload);
  } catch (const ordered_json::parse_error& e) {
    throw UsageError("invalid JSON in '" + argument + "': " + e.what());
  }
}

WeightFunction parse_weight_spec(const std::string& argument) {
  const ordered_json spec = load_json_argument(argument);
  if (!spec.is_object()) {
    throw UsageError("weight spec must be a JSON object");
  }
  Rational default_value = 1;
  std::map<unsigned, Rational> overrides;
  for (const auto& [key, value] : spec.items()) {
    if (key == "default") {
      default_value = rational_from_json(value, "weight spec default");
    } else if (key == "values") {
      if (!value.is_object()) {
        throw UsageError("weight spec: \"values\" must be an object");
      }
      for (const auto& [part, weight] : value.items()) {
        overrides[positive_key(part)] = rational_from_json(weight, "weight spec value");
      }
    } else {
      throw UsageError("weight spec: unknown key '" + key + "'");
    }
  }
  return WeightFunction(std::move(default_value), std::move(overrides));
}

std::vector<Rational> parse_rational_array(const std::string& argument) {
  const ordered_json array = load_json_argument(argument);
  if (!array.is_array()) {
    throw UsageError("expected a JSON array of rational strings");
  }
  std::vector<Rational> values;
  values.reserve(array.size());
  for (const auto& entry : array) {
    values.push_back(rational_from_json(entry, "array entry"));
  }
  return values;
}

TruncatedSeries parse_series(const std::string& argument) {
  std::vector<Rational> coeffs = parse_rational_array(argument);
  if (coeffs.empty()) {
    throw UsageError("series needs at least the constant coefficient");
  }
  return TruncatedSeries::from_coefficients(std::move(coeffs));
}

nlohmann::ordered_json weight_spec_json(const WeightFunction& weights) {
  ordered_json values = ordered_json::object();
  for (const auto& [key, weight] : weights.overrides()) {
    values[std::to_string(key)] = weight.to_string();
  }
  return ordered_json{{"default", weights.default_value().to_string()},
                      {"values", std::move(values)}};
}

nlohmann::ordered_json series_json(const TruncatedSeries& series) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : series.coefficients()) {
    coeffs.push_back(c.to_string());
  }
  return coeffs;
}

}  // namespace fdb::cli
