#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdb/power_series.hpp"
#include "fdb/rational.hpp"
#include "fdb/weight_function.hpp"

namespace fdb::cli {

/// Bad flags, malformed JSON, unreadable files, out-of-range arguments.
/// Mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON (first non-space character '{' or '[') is parsed directly;
/// anything else is treated as a path to a UTF-8 JSON file.
nlohmann::ordered_json load_json_argument(const std::string& argument);

/// {"default": "1", "values": {"3": "2"}} with both keys optional.
/// Values are rational strings (or plain JSON integers); map keys must
/// parse as integers >= 1.
WeightFunction parse_weight_spec(const std::string& argument);

/// JSON array of rational strings (or plain integers), index = degree.
TruncatedSeries parse_series(const std::string& argument);

/// JSON array of rational strings (or plain integers).
std::vector<Rational> parse_rational_array(const std::string& argument);

nlohmann::ordered_json weight_spec_json(const WeightFunction& weights);
nlohmann::ordered_json series_json(const TruncatedSeries& series);

}  // namespace fdb::cli
