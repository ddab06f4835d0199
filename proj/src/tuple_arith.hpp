#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "crg/wreath.hpp"

namespace crg::detail {

/// Group elements as 64-bit keys plus the arithmetic the orbit engine needs.
/// Packable groups use the packed encoding directly; everything else interns
/// elements in a table.
class TupleArith {
 public:
  virtual ~TupleArith() = default;

  virtual std::uint64_t encode(const WreathElement& x) = 0;
  virtual WreathElement decode(std::uint64_t key) const = 0;
  /// Whether expand() may run on several threads at once.
  virtual bool thread_safe() const = 0;
  /// Strict order matching the element order used for output.
  virtual bool less(std::uint64_t a, std::uint64_t b) const = 0;

  virtual std::uint64_t multiply(std::uint64_t a, std::uint64_t b) = 0;
  virtual std::uint64_t inverse(std::uint64_t a) = 0;

  /// For each m-tuple in `states`, writes its 2(m-1) neighbours under
  /// sigma_1, sigma_1^-1, sigma_2, ... to out (row-major, m keys each).
  virtual void expand(std::span<const std::uint64_t> states, std::size_t m, std::uint64_t* out) = 0;

  std::uint64_t conjugate(std::uint64_t x, std::uint64_t by) { return multiply(multiply(inverse(by), x), by); }
  /// Single Hurwitz move, 1-based letter.
  void apply(std::span<std::uint64_t> tuple, int letter);

  static std::unique_ptr<TupleArith> make(const GroupParams& params);
};

inline int letter_of_neighbour(std::size_t j) {
  const int i = static_cast<int>(j / 2) + 1;
  return j % 2 == 0 ? i : -i;
}

}  // namespace crg::detail
