#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fdb/rational.hpp"
#include "fdb/weight_function.hpp"

namespace fdb {

/// Ordered tuple of positive parts summing to `total`.
struct Composition {
  unsigned total;
  std::vector<unsigned> parts;

  /// Validates: nonempty, every part >= 1, parts sum to n.
  /// Throws std::domain_error otherwise.
  Composition(unsigned n, std::vector<unsigned> parts_in);

  friend bool operator==(const Composition&, const Composition&) = default;
};

/**
 * Partition of `total` in multiplicity form: multiplicity[i-1] counts the
 * parts equal to i, so sum(i * multiplicity[i-1]) == total. `part_count`
 * is the number of parts (the r under the sums of the counting formulas).
 */
struct MultiplicityVector {
  unsigned total;
  std::vector<unsigned> multiplicity;  // exactly `total` entries
  unsigned part_count;

  /// Validates the weighted-sum constraint and 1 <= part_count <= total.
  /// Throws std::domain_error otherwise.
  MultiplicityVector(unsigned n, std::vector<unsigned> multiplicity_in);

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

Integer factorial(unsigned n);

/// (sum counts)! / prod(counts[i]!), exactly.
/// Throws std::domain_error if `counts` is empty.
Integer multinomial(std::span<const unsigned> counts);

/**
 * Lazy stream of all compositions of n in lexicographic order by parts
 * sequence: (1,1,...,1) first, (n) last. Never materializes more than the
 * current composition, so the 2^(n-1)-element stream runs in O(n) memory.
 */
class CompositionRange {
 public:
  /// Throws std::domain_error if n == 0.
  explicit CompositionRange(unsigned n);

  class iterator {
   public:
    using value_type = Composition;
    using reference = const Composition&;
    using pointer = const Composition*;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    iterator operator++(int) { iterator copy = *this; ++*this; return copy; }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (!a.current_ || !b.current_) return !a.current_ && !b.current_;
      return a.current_->parts == b.current_->parts;
    }

   private:
    friend class CompositionRange;
    explicit iterator(unsigned n);
    std::optional<Composition> current_;  // nullopt once exhausted
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  unsigned n_;
};

/**
 * Lazy stream of the multiplicity vectors of n, one per integer partition,
 * ordered by the underlying partitions in decreasing lexicographic part
 * order: (n) first, (1,...,1) last. Yields p(n) items.
 */
class MultiplicityVectorRange {
 public:
  /// Throws std::domain_error if n == 0.
  explicit MultiplicityVectorRange(unsigned n);

  class iterator {
   public:
    using value_type = MultiplicityVector;
    using reference = const MultiplicityVector&;
    using pointer = const MultiplicityVector*;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    iterator operator++(int) { iterator copy = *this; ++*this; return copy; }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (!a.current_ || !b.current_) return !a.current_ && !b.current_;
      return a.parts_ == b.parts_;
    }

   private:
    friend class MultiplicityVectorRange;
    explicit iterator(unsigned n);
    void load_current();
    std::vector<unsigned> parts_;  // current partition, weakly decreasing
    std::optional<MultiplicityVector> current_;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  unsigned n_;
};

CompositionRange enumerate_compositions(unsigned n);
MultiplicityVectorRange enumerate_multiplicity_vectors(unsigned n);

/// Total f-weight of the partitions of n: sum over multiplicity vectors of
/// prod f(i)^k_i.
Rational weighted_partition_weight(unsigned n, const WeightFunction& f);

/// Total f-weight of the compositions of n: the partition sum with each
/// term carrying its multinomial ordering factor.
Rational weighted_composition_weight(unsigned n, const WeightFunction& f);

/// C_{f,g}(n): as above with each r-part term additionally weighted by g(r).
Rational weighted_composition_weight(unsigned n, const WeightFunction& f,
                                     const WeightFunction& g);

/**
 * Brute-force reference for C_{f,g}(n): walks every composition of n and
 * accumulates g(#parts) * prod f(part). Makes no use of the closed-form
 * counting formula, so it serves as an independent oracle for it.
 * Exponential in n; intended for n up to ~20.
 */
Rational oracle_composition_weight(unsigned n, const WeightFunction& f,
                                   const WeightFunction& g);

}  // namespace fdb
