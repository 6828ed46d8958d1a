#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fdb {

/// Arbitrary-precision signed integer used for factorials, multinomials and
/// rational components.
using Integer = boost::multiprecision::cpp_int;

/**
 * Exact rational scalar.
 *
 * Always held in lowest terms with a positive denominator; zero is 0/1.
 * Every operation is exact -- there is no rounding anywhere in this library.
 */
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Builds numerator/denominator, normalizing sign and common factors.
  /// Throws std::domain_error if denominator is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }

  Rational& operator+=(const Rational& other) { value_ += other.value_; return *this; }
  Rational& operator-=(const Rational& other) { value_ -= other.value_; return *this; }
  Rational& operator*=(const Rational& other) { value_ *= other.value_; return *this; }

  /// Exact division. Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  /// Integer power with the combinatorial convention pow(0, 0) == 1.
  Rational pow(unsigned exponent) const;

  /// "p/q" when the denominator is not 1, plain "p" otherwise.
  std::string to_string() const;

  /// Parses an optional sign, digits, and an optional "/digits" suffix.
  /// "3", "-2", "1/3" are valid; "1.5", "1/0" and "" are not.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace fdb
