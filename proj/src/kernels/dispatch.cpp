#include <cstdlib>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kernels_internal.hpp"

namespace crg::packed {

bool packable(const GroupParams& params) {
  return !params.is_cover() && params.rank() <= kMaxRank && params.modulus() <= kMaxModulus;
}

Lanes identity_lanes() {
  Lanes l;
  for (int k = 0; k < kMaxRank; ++k) l.bytes[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
  return l;
}

Lanes to_lanes(const WreathElement& x) {
  if (!packable(x.params())) throw std::invalid_argument("group " + x.params().to_string() + " is not packable");
  Lanes l = identity_lanes();
  for (int k = 0; k < x.rank(); ++k) {
    l.bytes[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(x.perm()(k));
    l.bytes[8U + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(x.weight(k));
  }
  return l;
}

WreathElement from_lanes(const Lanes& lanes, const GroupParams& params) {
  const int n = params.rank();
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    images[static_cast<std::size_t>(k)] = lanes.image(k);
    weights[static_cast<std::size_t>(k)] = lanes.weight(k);
  }
  return WreathElement(params, Permutation(std::move(images)), std::move(weights));
}

std::uint64_t pack(const Lanes& lanes) {
  std::uint64_t word = 0;
  for (int k = 0; k < kMaxRank; ++k) {
    word |= static_cast<std::uint64_t>(lanes.image(k) & 7U) << (3 * k);
    word |= static_cast<std::uint64_t>(lanes.weight(k) & 15U) << (24 + 4 * k);
  }
  return word;
}

Lanes unpack(std::uint64_t word) {
  Lanes l;
  for (int k = 0; k < kMaxRank; ++k) {
    l.bytes[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((word >> (3 * k)) & 7U);
    l.bytes[8U + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((word >> (24 + 4 * k)) & 15U);
  }
  return l;
}

std::span<const KernelTable* const> available_kernels() {
  static const std::vector<const KernelTable*> tables = [] {
    std::vector<const KernelTable*> t{&detail::kScalarKernels};
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("ssse3") && __builtin_cpu_supports("sse4.1")) t.push_back(&detail::kSsse3Kernels);
    if (__builtin_cpu_supports("avx2")) t.push_back(&detail::kAvx2Kernels);
#endif
    return t;
  }();
  return tables;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    auto tables = available_kernels();
    if (const char* env = std::getenv("CRG_KERNELS")) {
      for (const auto* t : tables) {
        if (t->name == std::string_view(env)) return t;
      }
    }
    return tables.back();
  }();
  return *chosen;
}

Lanes multiply(const Lanes& x, const Lanes& y, std::uint8_t modulus) { return detail::scalar_multiply(x, y, modulus); }
Lanes inverse(const Lanes& x, std::uint8_t modulus) { return detail::scalar_inverse(x, modulus); }
Lanes conjugate(const Lanes& x, const Lanes& by, std::uint8_t modulus) {
  return detail::scalar_multiply(detail::scalar_multiply(detail::scalar_inverse(by, modulus), x, modulus), by, modulus);
}

}  // namespace crg::packed
