#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "crg/reflection.hpp"

namespace crg {

/// A sequence of Hurwitz generators: +i is sigma_i, -i is sigma_i^-1, with i
/// 1-based. Letters are applied left to right: the first letter acts first.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws std::invalid_argument on a zero letter.
  explicit BraidWord(std::vector<int> letters);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(int letter);
  void append(const BraidWord& other);
  /// The same letters shifted by offset strands (letter +-i becomes +-(i+offset)).
  BraidWord shifted(int offset) const;
  /// Reversed and negated: undoes this word.
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<int> letters_;
};

/// An ordered tuple of reflections of one group with its cached product.
class Factorization {
 public:
  /// Throws std::invalid_argument if a factor lives in another group.
  Factorization(GroupParams params, std::vector<Reflection> factors);
  /// Classifies each element; throws std::invalid_argument on a non-reflection.
  static Factorization from_elements(const GroupParams& params, std::span<const WreathElement> elements);

  const GroupParams& params() const { return params_; }
  std::span<const Reflection> factors() const { return factors_; }
  const Reflection& operator[](std::size_t i) const { return factors_[i]; }
  std::size_t size() const { return factors_.size(); }
  const WreathElement& product() const { return product_; }
  std::vector<WreathElement> elements() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.params_ == b.params_ && a.factors_ == b.factors_;
  }

 private:
  GroupParams params_;
  std::vector<Reflection> factors_;
  WreathElement product_;
};

/// 1-based closed interval [a, b] of tuple positions.
struct Interval {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// ----------------------------------------------------------- tuple level
// These act on arbitrary group elements; cabled tuples need that.

WreathElement tuple_product(const GroupParams& params, std::span<const WreathElement> tuple);

/// sigma_i: (t_i, t_i+1) -> (t_i+1, t_i+1^-1 t_i t_i+1); sigma_i^-1:
/// (t_i, t_i+1) -> (t_i t_i+1 t_i^-1, t_i). i is 1-based; sign is +1 or -1.
void apply_move_in_place(std::vector<WreathElement>& tuple, std::size_t i, int sign);
void apply_braid_in_place(std::vector<WreathElement>& tuple, const BraidWord& w);

/// Throws std::out_of_range when a letter does not fit a tuple of length m.
void check_braid(const BraidWord& w, std::size_t m);

// ----------------------------------------------------- factorization level

/// Throws std::out_of_range unless 1 <= i <= m-1 and sign is +-1. A factor
/// that stops being a reflection is an InternalError.
Factorization apply_move(const Factorization& f, std::size_t i, int sign);
Factorization apply_braid(const Factorization& f, const BraidWord& w);

/// Sorted multiset of class labels of the factors.
std::vector<ClassLabel> invariant_multiset(const Factorization& f);

/// (f_1, ..., f_a-1, f_a ... f_b, f_b+1, ..., f_m). Throws std::out_of_range
/// on an invalid interval.
std::vector<WreathElement> cable(std::span<const WreathElement> tuple, Interval interval);
inline std::vector<WreathElement> cable(const Factorization& f, Interval interval) {
  return cable(f.elements(), interval);
}

/// Lifts a braid word acting on the tuple cabled at `interval` to a word on
/// the full length-m tuple, returning the interval the block occupies after
/// the word. cable(apply(full, lifted), new_interval) = apply(cable(full,
/// interval), w).
std::pair<BraidWord, Interval> lift_braid_through_cable(const BraidWord& w, Interval interval, std::size_t m);

struct TupleInvariants {
  WreathElement product;
  std::size_t subgroup_size;
  /// One conjugation orbit (sorted element list) per factor, sorted.
  std::vector<std::vector<WreathElement>> orbits;
};

/// Product, order of the generated subgroup H and the multiset of
/// H-conjugation orbits of the factors. Finite groups only; throws
/// BudgetExceeded when H exceeds subgroup_cap elements.
TupleInvariants tuple_invariants_general(const Factorization& f, std::size_t subgroup_cap = 100'000);

}  // namespace crg
