#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crg/group_params.hpp"

namespace crg {

/// A permutation of {0,...,n-1} in one-line notation: images()[k] = w(k).
///
/// Composition follows the column-vector action of monomial matrices:
/// (w * u)(k) = w(u(k)), i.e. u is applied first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection on {0..n-1}.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n);
  /// The transposition swapping i and j (0-based, i != j).
  static Permutation transposition(int n, int i, int j);
  /// k -> k+1 on {0..len-1} (len-1 -> 0), fixing the rest.
  static Permutation cycle(int n, int len);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Least k >= 1 with w^k = id.
  std::uint64_t order() const;
  int cycle_count() const;

  friend Permutation operator*(const Permutation& w, const Permutation& u);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// An element [w; a] of G(d,1,n), G(d,d,n) or a generic cover.
///
/// weights()[k] is the exponent of the root of unity in column k of the
/// monomial matrix (the power of x in the cover). Finite-group weights are
/// stored in {0,...,d-1}.
class WreathElement {
 public:
  /// Normalizes weights mod d in finite groups. Throws std::invalid_argument
  /// on a length mismatch or when a Family::Full element has nonzero weight.
  WreathElement(GroupParams params, Permutation perm, std::vector<Weight> weights);

  static WreathElement identity(const GroupParams& params);
  /// Diagonal [eps; w e_position].
  static WreathElement diagonal(const GroupParams& params, int position, Weight w);
  /// [(i j); k]: weight -k at i, +k at j, zero elsewhere. i, j are 0-based.
  static WreathElement transposition(const GroupParams& params, int i, int j, Weight twist);

  const GroupParams& params() const { return params_; }
  const Permutation& perm() const { return perm_; }
  std::span<const Weight> weights() const { return weights_; }
  Weight weight(int k) const { return weights_[static_cast<std::size_t>(k)]; }
  int rank() const { return perm_.size(); }

  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const WreathElement& x, const WreathElement& y) {
    return x.perm_ == y.perm_ && x.weights_ == y.weights_ && x.params_ == y.params_;
  }
  /// Orders by permutation, then weights. Only meaningful within one group.
  friend std::strong_ordering operator<=>(const WreathElement& x, const WreathElement& y);

 private:
  struct Trusted {};
  WreathElement(Trusted, GroupParams params, Permutation perm, std::vector<Weight> weights)
      : params_(params), perm_(std::move(perm)), weights_(std::move(weights)) {}

  friend WreathElement multiply(const WreathElement&, const WreathElement&);
  friend WreathElement inverse(const WreathElement&);
  friend WreathElement project(const WreathElement&, int);

  GroupParams params_;
  Permutation perm_;
  std::vector<Weight> weights_;
};

/// [w; a] * [u; b] = [wu; u(a) + b] with u(a) = (a_{u(1)}, ..., a_{u(n)}).
/// Throws IncompatibleGroups on a parameter mismatch and WeightOverflow when a
/// cover weight leaves the int64 range.
WreathElement multiply(const WreathElement& x, const WreathElement& y);
inline WreathElement operator*(const WreathElement& x, const WreathElement& y) { return multiply(x, y); }

WreathElement inverse(const WreathElement& x);

/// by^-1 * x * by.
WreathElement conjugate(const WreathElement& x, const WreathElement& by);

/// Sum of the weights, reduced mod d in finite groups.
Weight total_weight(const WreathElement& x);

/// pi_d: reduces the weights of a cover element mod d. d = 1 gives the
/// underlying permutation as an element of G(1,1,n).
WreathElement project(const WreathElement& x, int d);

/// Multiplicative order; std::nullopt means infinite (cover elements whose
/// power at the permutation order has nonzero weights).
std::optional<std::uint64_t> element_order(const WreathElement& x);

/// x^k for k >= 0.
WreathElement power(const WreathElement& x, std::uint64_t k);

}  // namespace crg
