#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace crg {

using Weight = std::int64_t;

/// e = 1 gives G(d,1,n); e = d gives the weight-zero subgroup G(d,d,n).
enum class Family : std::uint8_t { One, Full };

/// Identifies G(d,1,n), G(d,d,n) or one of the generic covers G(inf,1,n),
/// G(inf,inf,n). The infinite modulus is a separate state, never d = 0.
///
/// d = 1 always normalizes to Family::One, so G(1,1,n) (the symmetric group)
/// has a single representation.
class GroupParams {
 public:
  static GroupParams finite(int d, Family family, int n);
  static GroupParams cover(Family family, int n);
  /// Parses "d,e,n" with "inf" for the infinite modulus, e.g. "2,1,3" or
  /// "inf,inf,4". Throws std::invalid_argument on anything else.
  static GroupParams parse(std::string_view text);

  bool is_cover() const { return !modulus_.has_value(); }
  /// Throws std::logic_error on a cover.
  int modulus() const;
  Family family() const { return family_; }
  int rank() const { return n_; }

  /// Finite groups only: |G(d,1,n)| = d^n n!, |G(d,d,n)| = d^(n-1) n!.
  /// Saturates at UINT64_MAX.
  std::uint64_t order() const;

  /// Same family and rank with the modulus replaced by d (cover -> finite).
  GroupParams with_modulus(int d) const { return finite(d, family_, n_); }
  GroupParams as_cover() const { return cover(family_, n_); }

  std::string to_string() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  GroupParams(std::optional<int> d, Family family, int n) : modulus_(d), family_(family), n_(n) {}

  std::optional<int> modulus_;
  Family family_;
  int n_;
};

}  // namespace crg
