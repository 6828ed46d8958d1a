#include "fdb/power_series.hpp"

#include <algorithm>

#include "fdb/combinatorics.hpp"

namespace fdb {

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<Rational> coeffs) {
  if (coeffs.empty()) {
    throw std::domain_error("TruncatedSeries: needs at least the constant coefficient");
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::from_derivatives(const std::vector<Rational>& derivs) {
  if (derivs.empty()) {
    throw std::domain_error("TruncatedSeries: needs at least the value at 0");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(derivs.size());
  for (size_t n = 0; n < derivs.size(); ++n) {
    coeffs.push_back(derivs[n] / Rational(factorial(static_cast<unsigned>(n))));
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, unsigned precision) {
  std::vector<Rational> coeffs(precision + 1, Rational(0));
  coeffs[0] = value;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::identity(unsigned precision) {
  if (precision < 1) {
    throw std::domain_error("TruncatedSeries: identity needs precision >= 1");
  }
  std::vector<Rational> coeffs(precision + 1, Rational(0));
  coeffs[1] = 1;
  return TruncatedSeries(std::move(coeffs));
}

const Rational& TruncatedSeries::coefficient(unsigned degree) const {
  if (degree >= coeffs_.size()) {
    throw std::out_of_range("TruncatedSeries: coefficient beyond precision is unknown");
  }
  return coeffs_[degree];
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_precision) const {
  if (new_precision > precision()) {
    throw std::out_of_range("TruncatedSeries: cannot extend precision");
  }
  return TruncatedSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_precision + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.precision(), b.precision());
  std::vector<Rational> coeffs(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    coeffs[i] = a.coeffs_[i] + b.coeffs_[i];
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.precision(), b.precision());
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(1, base.precision());
  for (unsigned i = 0; i < exponent; ++i) {
    result = result * base;
  }
  return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner.coefficient(0).is_zero()) {
    throw CompositionDomainError(
        "compose: inner series must have zero constant term (valuation >= 1)");
  }
  const unsigned n = std::min(outer.precision(), inner.precision());
  const TruncatedSeries f = inner.truncated(n);
  // Horner: (((g_N * f + g_{N-1}) * f + ...) * f + g_0).
  TruncatedSeries acc = TruncatedSeries::constant(outer.coefficient(n), n);
  for (unsigned k = n; k-- > 0;) {
    acc = acc * f + TruncatedSeries::constant(outer.coefficient(k), n);
  }
  return acc;
}

}  // namespace fdb
