#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "fdb/rational.hpp"

namespace fdb {

/**
 * Weight assignment on the positive integers: a finite set of overrides on
 * top of a default value. Evaluation at 0 is a domain error; weights are
 * defined on part values and part counts, both of which start at 1.
 */
class WeightFunction {
 public:
  WeightFunction() : default_(1) {}
  explicit WeightFunction(Rational default_value,
                          std::map<unsigned, Rational> overrides = {})
      : default_(std::move(default_value)), overrides_(std::move(overrides)) {
    if (overrides_.count(0) != 0) {
      throw std::domain_error("WeightFunction: override keys must be >= 1");
    }
  }

  static WeightFunction constant(Rational value) {
    return WeightFunction(std::move(value));
  }

  const Rational& operator()(unsigned i) const {
    if (i == 0) {
      throw std::domain_error("WeightFunction: undefined at 0");
    }
    const auto it = overrides_.find(i);
    return it != overrides_.end() ? it->second : default_;
  }

  const Rational& default_value() const { return default_; }
  const std::map<unsigned, Rational>& overrides() const { return overrides_; }

 private:
  Rational default_;
  std::map<unsigned, Rational> overrides_;
};

}  // namespace fdb
