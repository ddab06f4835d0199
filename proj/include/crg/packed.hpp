#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "crg/wreath.hpp"

namespace crg::packed {

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxModulus = 16;

/// Finite groups with n <= 8 and d <= 16 fit the packed encodings.
bool packable(const GroupParams& params);

/// Byte-lane form used by the arithmetic kernels: bytes [0,8) hold the
/// permutation images, bytes [8,16) the weights. Lanes at k >= n carry the
/// identity (image k, weight 0) so full-width shuffles stay valid.
struct alignas(16) Lanes {
  std::array<std::uint8_t, 16> bytes{};

  std::uint8_t image(int k) const { return bytes[static_cast<std::size_t>(k)]; }
  std::uint8_t weight(int k) const { return bytes[8 + static_cast<std::size_t>(k)]; }

  friend bool operator==(const Lanes&, const Lanes&) = default;
};

Lanes identity_lanes();
Lanes to_lanes(const WreathElement& x);
WreathElement from_lanes(const Lanes& lanes, const GroupParams& params);

/// 64-bit key: image k in bits [3k, 3k+3), weight k in bits [24+4k, 28+4k).
std::uint64_t pack(const Lanes& lanes);
Lanes unpack(std::uint64_t word);
inline std::uint64_t pack(const WreathElement& x) { return pack(to_lanes(x)); }
inline WreathElement unpack(std::uint64_t word, const GroupParams& params) {
  return from_lanes(unpack(word), params);
}

/// One implementation of the batch arithmetic. Every table computes the same
/// function; they differ only in the instruction set used.
struct KernelTable {
  std::string_view name;
  /// out[i] = x[i] * y[i] (mod modulus).
  void (*multiply)(std::span<const Lanes> x, std::span<const Lanes> y, std::span<Lanes> out, std::uint8_t modulus);
  /// out[i] = by[i]^-1 * x[i] * by[i].
  void (*conjugate)(std::span<const Lanes> x, std::span<const Lanes> by, std::span<Lanes> out, std::uint8_t modulus);
  /// out[i] = x[i]^-1.
  void (*inverse)(std::span<const Lanes> x, std::span<Lanes> out, std::uint8_t modulus);
};

/// Kernels usable on this CPU, scalar first.
std::span<const KernelTable* const> available_kernels();
/// Widest usable kernel set; chosen once on first call. CRG_KERNELS=scalar
/// forces the reference path.
const KernelTable& active_kernels();

// Single-element helpers routed through the scalar reference.
Lanes multiply(const Lanes& x, const Lanes& y, std::uint8_t modulus);
Lanes inverse(const Lanes& x, std::uint8_t modulus);
Lanes conjugate(const Lanes& x, const Lanes& by, std::uint8_t modulus);

}  // namespace crg::packed
