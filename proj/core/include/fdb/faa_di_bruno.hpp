#pragma once

#include <span>
#include <vector>

#include "fdb/combinatorics.hpp"
#include "fdb/power_series.hpp"
#include "fdb/rational.hpp"

namespace fdb {

/**
 * One summand of the closed form for the nth derivative of a composite
 * function: the multiplicities (b_1,...,b_n) with sum(i*b_i) = n, the
 * integer prefactor n!/(b_1!...b_n!), and the outer derivative order
 * r = sum(b_i).
 */
struct FdBTerm {
  MultiplicityVector multiplicities;
  Integer coefficient;
  unsigned derivative_order;
};

/// All p(n) terms of the nth-derivative formula, ordered like
/// enumerate_multiplicity_vectors(n). Throws std::domain_error if n == 0.
std::vector<FdBTerm> fdb_terms(unsigned n);

/**
 * The nth derivative of a composite G(F(x)) from derivative values alone:
 *
 *   sum over terms of  coeff * g_derivs[r] * prod_i (f_derivs[i] / i!)^b_i
 *
 * Both tables are 1-based in the contract: f_derivs[0] holds the first
 * derivative of F at the point of interest, g_derivs[0] the first
 * derivative of G at F's value there. The function values themselves are
 * never consumed. Throws std::invalid_argument if either table has fewer
 * than n entries.
 */
Rational nth_derivative_composite(unsigned n, std::span<const Rational> f_derivs,
                                  std::span<const Rational> g_derivs);

/// n! times coefficient n of compose(outer, inner): the nth derivative of
/// the composite at 0. Inner constant term must be zero; n must not exceed
/// the shared precision.
Rational derivative_via_series(const TruncatedSeries& outer,
                               const TruncatedSeries& inner, unsigned n);

}  // namespace fdb
