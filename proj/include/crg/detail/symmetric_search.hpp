#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crg/hurwitz.hpp"

namespace crg::detail {

/// A transposition (i j) of S_n, 0-based with i < j.
struct Transposition {
  std::uint8_t i;
  std::uint8_t j;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

using TranspositionTuple = std::vector<Transposition>;

/// pi_1 of a tuple of transposition-like reflections.
TranspositionTuple project_transpositions(std::span<const Reflection> factors);

/// Hurwitz action in S_n restricted to transpositions.
void apply_symmetric_braid(TranspositionTuple& tuple, const BraidWord& w);

/// Breadth-first search for a braid word making (i j) the first factor.
/// Throws BudgetExceeded after `budget` states or std::invalid_argument if
/// the orbit closes without reaching it.
BraidWord braid_to_front(const TranspositionTuple& tuple, Transposition wanted, std::size_t budget);

/// Breadth-first search for a braid word taking a transposition
/// factorization of (1 2 ... n) to ((1 2), ..., (1 2), (1 2), (2 3), ...,
/// (n-1 n)). Results are memoized per input tuple.
BraidWord braid_to_staircase(const TranspositionTuple& tuple, int n, std::size_t budget);

/// ((1 2) x (len - n + 1), (2 3), ..., (n-1 n)).
TranspositionTuple staircase(int n, std::size_t len);

}  // namespace crg::detail
