#include "fdb/faa_di_bruno.hpp"

#include <stdexcept>

namespace fdb {

std::vector<FdBTerm> fdb_terms(unsigned n) {
  std::vector<FdBTerm> terms;
  const Integer n_factorial = factorial(n);
  for (const auto& mv : enumerate_multiplicity_vectors(n)) {
    Integer coefficient = n_factorial;
    for (unsigned b : mv.multiplicity) {
      if (b > 1) coefficient /= factorial(b);
    }
    const unsigned order = mv.part_count;
    terms.push_back(FdBTerm{mv, std::move(coefficient), order});
  }
  return terms;
}

Rational nth_derivative_composite(unsigned n, std::span<const Rational> f_derivs,
                                  std::span<const Rational> g_derivs) {
  if (n == 0) {
    throw std::domain_error("nth_derivative_composite: n must be >= 1");
  }
  if (f_derivs.size() < n || g_derivs.size() < n) {
    throw std::invalid_argument(
        "nth_derivative_composite: derivative tables need at least n entries");
  }
  Rational total = 0;
  for (const auto& term : fdb_terms(n)) {
    Rational product = Rational(term.coefficient) * g_derivs[term.derivative_order - 1];
    for (unsigned i = 0; i < term.multiplicities.multiplicity.size(); ++i) {
      const unsigned b = term.multiplicities.multiplicity[i];
      if (b != 0) {
        product *= (f_derivs[i] / Rational(factorial(i + 1))).pow(b);
      }
    }
    total += product;
  }
  return total;
}

Rational derivative_via_series(const TruncatedSeries& outer,
                               const TruncatedSeries& inner, unsigned n) {
  if (n == 0) {
    throw std::domain_error("derivative_via_series: n must be >= 1");
  }
  if (n > outer.precision() || n > inner.precision()) {
    throw std::out_of_range("derivative_via_series: n exceeds series precision");
  }
  return compose(outer, inner).coefficient(n) * Rational(factorial(n));
}

}  // namespace fdb
