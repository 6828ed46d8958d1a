#pragma once

#include <stdexcept>
#include <vector>

#include "fdb/rational.hpp"

namespace fdb {

/// Raised when composing with an inner series whose constant term is
/// nonzero; formal composition is only defined for inner valuation >= 1.
class CompositionDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Formal power series known modulo x^(N+1), with exact rational
 * coefficients. Coefficients beyond the precision N are unknown, not zero:
 * binary operations truncate to the smaller precision rather than padding.
 */
class TruncatedSeries {
 public:
  /// coeffs = (c_0, ..., c_N); throws std::domain_error if empty.
  static TruncatedSeries from_coefficients(std::vector<Rational> coeffs);

  /// derivs = (S(0), S'(0), ..., S^(N)(0)); coefficient n is derivs[n]/n!.
  /// Throws std::domain_error if empty.
  static TruncatedSeries from_derivatives(const std::vector<Rational>& derivs);

  static TruncatedSeries constant(const Rational& value, unsigned precision);

  /// The series x. Requires precision >= 1.
  static TruncatedSeries identity(unsigned precision);

  unsigned precision() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

  /// Throws std::out_of_range beyond the precision: that coefficient is
  /// unknown, not zero.
  const Rational& coefficient(unsigned degree) const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Drops knowledge above new_precision. Throws std::out_of_range if the
  /// request exceeds what is known.
  TruncatedSeries truncated(unsigned new_precision) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<Rational> coeffs_;
};

/// Repeated multiplication; pow(s, 0) is the constant-one series at s's
/// precision.
TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent);

/**
 * Composition outer(inner) at the shared precision, evaluated Horner-style
 * so only min(N_outer, N_inner) series multiplications occur. Requires the
 * inner constant term to be zero; throws CompositionDomainError otherwise.
 */
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

}  // namespace fdb
