#include "commands.hpp"

#include <algorithm>
#include <iostream>

#include "fdb/combinatorics.hpp"
#include "fdb/faa_di_bruno.hpp"
#include "fdb/power_series.hpp"
#include "json_codec.hpp"

namespace fdb::cli {

namespace {

using nlohmann::ordered_json;

void require_positive_n(unsigned n) {
  if (n == 0) {
    throw UsageError("--n must be >= 1");
  }
}

WeightFunction weights_or_one(const std::optional<std::string>& spec) {
  return spec ? parse_weight_spec(*spec) : WeightFunction::constant(1);
}

}  // namespace

int run_count(const CountOptions& options) {
  require_positive_n(options.n);
  const WeightFunction f = weights_or_one(options.f_spec);
  Rational result;
  if (options.mode == "partition") {
    result = weighted_partition_weight(options.n, f);
  } else if (options.mode == "composition") {
    result = weighted_composition_weight(options.n, f);
  } else if (options.mode == "composition-g") {
    result = weighted_composition_weight(options.n, f, weights_or_one(options.g_spec));
  } else {
    throw UsageError("--mode must be partition, composition or composition-g");
  }
  std::cout << result.to_string() << "\n";
  return 0;
}

int run_enumerate(const EnumerateOptions& options) {
  require_positive_n(options.n);
  unsigned long long count = 0;
  if (options.kind == "compositions") {
    for (const auto& composition : enumerate_compositions(options.n)) {
      std::cout << ordered_json(composition.parts).dump() << "\n";
      ++count;
    }
  } else if (options.kind == "multiplicity-vectors") {
    for (const auto& mv : enumerate_multiplicity_vectors(options.n)) {
      std::cout << ordered_json(mv.multiplicity).dump() << "\n";
      ++count;
    }
  } else {
    throw UsageError("--kind must be compositions or multiplicity-vectors");
  }
  std::cerr << "count: " << count << "\n";
  return 0;
}

int run_compose(const ComposeOptions& options) {
  const TruncatedSeries outer = parse_series(options.g_series);
  const TruncatedSeries inner = parse_series(options.f_series);
  const unsigned shared = std::min(outer.precision(), inner.precision());
  unsigned precision = options.precision.value_or(shared);
  if (precision > shared) {
    throw UsageError("--precision " + std::to_string(precision) +
                     " exceeds the input series precision " + std::to_string(shared));
  }
  // CompositionDomainError (inner constant term nonzero) escapes to main -> exit 3.
  const TruncatedSeries result = compose(outer, inner).truncated(precision);
  std::cout << series_json(result).dump() << "\n";
  return 0;
}

int run_derivative(const DerivativeOptions& options) {
  require_positive_n(options.n);
  const std::vector<Rational> f_derivs = parse_rational_array(options.f_derivs);
  const std::vector<Rational> g_derivs = parse_rational_array(options.g_derivs);
  if (f_derivs.size() < options.n || g_derivs.size() < options.n) {
    throw UsageError("derivative tables need at least n = " + std::to_string(options.n) +
                     " entries");
  }
  std::cout << nth_derivative_composite(options.n, f_derivs, g_derivs).to_string() << "\n";
  return 0;
}

int run_fdb_terms(unsigned n) {
  require_positive_n(n);
  for (const auto& term : fdb_terms(n)) {
    ordered_json line{{"b", term.multiplicities.multiplicity},
                      {"r", term.derivative_order},
                      {"coeff", term.coefficient.str()}};
    std::cout << line.dump() << "\n";
  }
  return 0;
}

}  // namespace fdb::cli
