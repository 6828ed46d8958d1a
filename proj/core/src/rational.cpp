#include "fdb/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fdb {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) {
    throw std::domain_error("Rational: denominator must be nonzero");
  }
  // cpp_rational normalizes to lowest terms and positive denominator.
  value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  Rational result = 1;
  Rational base = *this;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Rational::to_string() const {
  const Integer den = denominator();
  std::string text = numerator().str();
  if (den != 1) {
    text += '/';
    text += den.str();
  }
  return text;
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
  };

  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  const auto digits = [&](std::string_view s) {
    if (s.empty()) fail();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    }
  };

  std::string_view num_part = rest;
  std::string_view den_part;
  if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_part = rest.substr(0, slash);
    den_part = rest.substr(slash + 1);
    digits(den_part);
  }
  digits(num_part);

  Integer num{std::string(num_part)};
  if (negative) num = -num;
  Integer den = den_part.empty() ? Integer(1) : Integer(std::string(den_part));
  if (den.is_zero()) fail();
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace fdb
