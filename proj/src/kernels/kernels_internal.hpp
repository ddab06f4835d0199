#pragma once

#include "crg/packed.hpp"

namespace crg::packed::detail {

extern const KernelTable kScalarKernels;
#if defined(__x86_64__) || defined(__i386__)
extern const KernelTable kSsse3Kernels;
extern const KernelTable kAvx2Kernels;
#endif

inline Lanes scalar_multiply(const Lanes& x, const Lanes& y, std::uint8_t d) {
  Lanes out;
  for (int k = 0; k < kMaxRank; ++k) {
    const auto u = y.bytes[static_cast<std::size_t>(k)];
    out.bytes[static_cast<std::size_t>(k)] = x.bytes[u];
    const int w = x.bytes[8U + u] + y.bytes[8U + static_cast<std::size_t>(k)];
    out.bytes[8U + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(w >= d ? w - d : w);
  }
  return out;
}

inline Lanes scalar_inverse(const Lanes& x, std::uint8_t d) {
  Lanes out;
  for (int k = 0; k < kMaxRank; ++k) out.bytes[x.bytes[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
  for (int k = 0; k < kMaxRank; ++k) {
    const int a = x.bytes[8U + out.bytes[static_cast<std::size_t>(k)]];
    out.bytes[8U + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(a == 0 ? 0 : d - a);
  }
  return out;
}

}  // namespace crg::packed::detail
