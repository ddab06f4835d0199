#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "crg/hurwitz.hpp"

namespace crg {

inline constexpr std::size_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr std::size_t kDefaultOrbitBudget = 10'000'000;

/// All m-tuples of reflections of a finite group multiplying to target, in
/// lexicographic order of the packed element encoding (element order for
/// groups too large to pack). Branches whose residual is not a product of the
/// remaining number of reflections are pruned. Throws BudgetExceeded after
/// `budget` search nodes.
std::vector<Factorization> enumerate_factorizations(const GroupParams& params, const WreathElement& target,
                                                    std::size_t m, std::size_t budget = kDefaultEnumerationBudget);

struct OrbitOptions {
  /// Maximum number of tuples held in one orbit.
  std::size_t budget = kDefaultOrbitBudget;
  /// Worker threads for frontier expansion; results do not depend on it.
  unsigned threads = 1;
};

namespace detail {
struct OrbitData;
}

/// A closed Hurwitz orbit. Members are kept in discovery order, which is
/// deterministic: breadth-first, moves tried as sigma_1, sigma_1^-1,
/// sigma_2, ... .
class Orbit {
 public:
  explicit Orbit(std::shared_ptr<const detail::OrbitData> data) : data_(std::move(data)) {}
  std::size_t size() const;
  const Factorization& start() const;
  Factorization member(std::size_t index) const;
  /// Braid word taking start() to member(index).
  BraidWord certificate(std::size_t index) const;
  std::optional<std::size_t> find(const Factorization& f) const;
  /// Replays every certificate; false on the first mismatch.
  bool validate_certificates() const;

 private:
  std::shared_ptr<const detail::OrbitData> data_;
};

/// Closure of start under sigma_i^{+-1}. Throws BudgetExceeded when the orbit
/// outgrows options.budget.
Orbit orbit_bfs(const Factorization& start, const OrbitOptions& options = {});

enum class Connectivity { Connected, NotConnected, Indeterminate };

struct SameOrbitResult {
  Connectivity verdict;
  /// Set when Connected: apply_braid(from, *word) == to.
  std::optional<BraidWord> word;
  /// Tuples visited before the verdict.
  std::size_t explored = 0;
};

/// Searches the orbit of `from` for `to`. NotConnected means the orbit closed
/// without reaching it; running out of budget gives Indeterminate. Throws
/// std::invalid_argument unless both have the same group, length and product.
SameOrbitResult same_orbit(const Factorization& from, const Factorization& to, const OrbitOptions& options = {});

struct OrbitSummary {
  /// Lexicographically least member.
  Factorization representative;
  std::size_t size;
  std::vector<ClassLabel> multiset;
};

struct OrbitReport {
  GroupParams group;
  WreathElement target;
  std::size_t length;
  std::size_t factorization_count = 0;
  std::size_t orbit_count = 0;
  std::size_t class_multiset_count = 0;
  /// Every orbit lies inside one invariant-multiset block.
  bool sound = false;
  /// Orbit partition equals the invariant-multiset partition.
  bool match = false;
  /// False when a budget ran out; the counts are then partial.
  bool complete = false;
  /// Every stored certificate replayed correctly.
  bool certificates_ok = false;
  /// Ordered by representative.
  std::vector<OrbitSummary> orbits;
};

struct VerifyOptions {
  std::size_t enumeration_budget = kDefaultEnumerationBudget;
  OrbitOptions orbit;
};

/// Partitions the length-m reflection factorizations of the standard Coxeter
/// element into Hurwitz orbits and compares with the invariant multisets.
/// Budget exhaustion yields a report with complete = false.
OrbitReport verify_main_theorem(const GroupParams& params, std::size_t m, const VerifyOptions& options = {});

}  // namespace crg
