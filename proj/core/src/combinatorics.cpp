#include "fdb/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace fdb {

Composition::Composition(unsigned n, std::vector<unsigned> parts_in)
    : total(n), parts(std::move(parts_in)) {
  if (parts.empty()) {
    throw std::domain_error("Composition: needs at least one part");
  }
  unsigned long long sum = 0;
  for (unsigned part : parts) {
    if (part == 0) {
      throw std::domain_error("Composition: parts must be positive");
    }
    sum += part;
  }
  if (sum != total) {
    throw std::domain_error("Composition: parts must sum to n");
  }
}

MultiplicityVector::MultiplicityVector(unsigned n, std::vector<unsigned> multiplicity_in)
    : total(n), multiplicity(std::move(multiplicity_in)), part_count(0) {
  if (multiplicity.size() != total) {
    throw std::domain_error("MultiplicityVector: needs exactly n multiplicities");
  }
  unsigned long long weighted = 0;
  unsigned long long count = 0;
  for (unsigned i = 0; i < multiplicity.size(); ++i) {
    weighted += static_cast<unsigned long long>(i + 1) * multiplicity[i];
    count += multiplicity[i];
  }
  if (weighted != total) {
    throw std::domain_error("MultiplicityVector: sum of i*k_i must equal n");
  }
  if (count == 0 || count > total) {
    throw std::domain_error("MultiplicityVector: part count out of range");
  }
  part_count = static_cast<unsigned>(count);
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Integer multinomial(std::span<const unsigned> counts) {
  if (counts.empty()) {
    throw std::domain_error("multinomial: empty count list");
  }
  unsigned long long sum = 0;
  for (unsigned c : counts) sum += c;
  Integer result = factorial(static_cast<unsigned>(sum));
  for (unsigned c : counts) {
    if (c > 1) result /= factorial(c);  // exact by construction
  }
  return result;
}

namespace {

void require_positive(unsigned n, const char* what) {
  if (n == 0) {
    throw std::domain_error(std::string(what) + ": n must be >= 1");
  }
}

}  // namespace

CompositionRange::CompositionRange(unsigned n) : n_(n) {
  require_positive(n, "enumerate_compositions");
}

CompositionRange::iterator::iterator(unsigned n)
    : current_(Composition(n, std::vector<unsigned>(n, 1))) {}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  // Lexicographic successor: no composition extends another (fixed sum), so
  // the next one bumps the second-to-last part and refills with ones.
  const auto& parts = current_->parts;
  const size_t k = parts.size();
  if (k == 1) {
    current_.reset();
    return *this;
  }
  std::vector<unsigned> next(parts.begin(), parts.end() - 1);
  const unsigned spare = parts.back() - 1;
  next.back() += 1;
  next.insert(next.end(), spare, 1u);
  current_.emplace(current_->total, std::move(next));
  return *this;
}

MultiplicityVectorRange::MultiplicityVectorRange(unsigned n) : n_(n) {
  require_positive(n, "enumerate_multiplicity_vectors");
}

MultiplicityVectorRange::iterator::iterator(unsigned n) : parts_{n} {
  load_current();
}

void MultiplicityVectorRange::iterator::load_current() {
  const unsigned n = std::accumulate(parts_.begin(), parts_.end(), 0u);
  std::vector<unsigned> multiplicity(n, 0);
  for (unsigned part : parts_) {
    multiplicity[part - 1] += 1;
  }
  current_.emplace(n, std::move(multiplicity));
}

MultiplicityVectorRange::iterator& MultiplicityVectorRange::iterator::operator++() {
  // Decreasing-lex successor: decrement the last part that exceeds 1, then
  // refill the tail greedily with parts no larger than the decremented one.
  size_t j = parts_.size();
  while (j > 0 && parts_[j - 1] == 1) --j;
  if (j == 0) {
    parts_.clear();
    current_.reset();
    return *this;
  }
  unsigned tail = 0;
  for (size_t i = j - 1; i < parts_.size(); ++i) tail += parts_[i];
  const unsigned head = parts_[j - 1] - 1;
  parts_.resize(j - 1);
  parts_.push_back(head);
  unsigned remaining = tail - head;
  parts_.insert(parts_.end(), remaining / head, head);
  if (remaining % head != 0) {
    parts_.push_back(remaining % head);
  }
  load_current();
  return *this;
}

CompositionRange enumerate_compositions(unsigned n) { return CompositionRange(n); }

MultiplicityVectorRange enumerate_multiplicity_vectors(unsigned n) {
  return MultiplicityVectorRange(n);
}

namespace {

Rational part_weight_product(const MultiplicityVector& mv, const WeightFunction& f) {
  Rational product = 1;
  for (unsigned i = 0; i < mv.multiplicity.size(); ++i) {
    if (mv.multiplicity[i] != 0) {
      product *= f(i + 1).pow(mv.multiplicity[i]);
    }
  }
  return product;
}

}  // namespace

Rational weighted_partition_weight(unsigned n, const WeightFunction& f) {
  Rational total = 0;
  for (const auto& mv : enumerate_multiplicity_vectors(n)) {
    total += part_weight_product(mv, f);
  }
  return total;
}

Rational weighted_composition_weight(unsigned n, const WeightFunction& f) {
  Rational total = 0;
  for (const auto& mv : enumerate_multiplicity_vectors(n)) {
    total += Rational(multinomial(mv.multiplicity)) * part_weight_product(mv, f);
  }
  return total;
}

Rational weighted_composition_weight(unsigned n, const WeightFunction& f,
                                     const WeightFunction& g) {
  Rational total = 0;
  for (const auto& mv : enumerate_multiplicity_vectors(n)) {
    total += Rational(multinomial(mv.multiplicity)) * g(mv.part_count) *
             part_weight_product(mv, f);
  }
  return total;
}

Rational oracle_composition_weight(unsigned n, const WeightFunction& f,
                                   const WeightFunction& g) {
  Rational total = 0;
  for (const auto& composition : enumerate_compositions(n)) {
    Rational weight = g(static_cast<unsigned>(composition.parts.size()));
    for (unsigned part : composition.parts) {
      weight *= f(part);
    }
    total += weight;
  }
  return total;
}

}  // namespace fdb
