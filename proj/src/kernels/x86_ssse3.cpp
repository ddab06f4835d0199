#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define CRG_SSSE3 __attribute__((target("ssse3,sse4.1")))

namespace crg::packed::detail {

namespace {

CRG_SSSE3 inline __m128i load(const Lanes& l) { return _mm_load_si128(reinterpret_cast<const __m128i*>(l.bytes.data())); }
CRG_SSSE3 inline void store(Lanes& l, __m128i v) { _mm_store_si128(reinterpret_cast<__m128i*>(l.bytes.data()), v); }

// Low half passes through, high half (weights) is reduced from [0, 2d) to [0, d).
CRG_SSSE3 inline __m128i reduce_weights(__m128i v, __m128i dvec) { return _mm_min_epu8(v, _mm_sub_epi8(v, dvec)); }

// Shuffle control reading lane p[k] into byte k and lane 8 + p[k] into byte 8 + k.
CRG_SSSE3 inline __m128i gather_control(__m128i perm) {
  return _mm_add_epi8(_mm_unpacklo_epi64(perm, perm), _mm_set_epi64x(0x0808080808080808LL, 0));
}

CRG_SSSE3 inline __m128i mul(__m128i x, __m128i y, __m128i dvec) {
  const __m128i high = _mm_set_epi64x(-1, 0);
  __m128i gathered = _mm_shuffle_epi8(x, gather_control(y));
  return reduce_weights(_mm_add_epi8(gathered, _mm_and_si128(y, high)), dvec);
}

CRG_SSSE3 inline __m128i inv(const Lanes& x, __m128i dvec) {
  // Permutation inversion is a scatter; do it in scalar, then gather weights.
  alignas(16) std::array<std::uint8_t, 16> p{};
  for (int k = 0; k < kMaxRank; ++k) p[x.bytes[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
  for (int k = 0; k < kMaxRank; ++k) p[8U + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(8 + p[static_cast<std::size_t>(k)]);
  const __m128i ctrl = _mm_load_si128(reinterpret_cast<const __m128i*>(p.data()));
  const __m128i high = _mm_set_epi64x(-1, 0);
  __m128i a = _mm_and_si128(_mm_shuffle_epi8(load(x), ctrl), high);
  __m128i neg = reduce_weights(_mm_sub_epi8(dvec, a), dvec);
  return _mm_or_si128(_mm_andnot_si128(high, ctrl), neg);
}

CRG_SSSE3 void multiply_batch(std::span<const Lanes> x, std::span<const Lanes> y, std::span<Lanes> out, std::uint8_t d) {
  const __m128i dvec = _mm_set_epi64x(static_cast<long long>(0x0101010101010101ULL * d), 0);
  for (std::size_t i = 0; i < out.size(); ++i) store(out[i], mul(load(x[i]), load(y[i]), dvec));
}

CRG_SSSE3 void conjugate_batch(std::span<const Lanes> x, std::span<const Lanes> by, std::span<Lanes> out, std::uint8_t d) {
  const __m128i dvec = _mm_set_epi64x(static_cast<long long>(0x0101010101010101ULL * d), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    __m128i b = load(by[i]);
    store(out[i], mul(mul(inv(by[i], dvec), load(x[i]), dvec), b, dvec));
  }
}

CRG_SSSE3 void inverse_batch(std::span<const Lanes> x, std::span<Lanes> out, std::uint8_t d) {
  const __m128i dvec = _mm_set_epi64x(static_cast<long long>(0x0101010101010101ULL * d), 0);
  for (std::size_t i = 0; i < out.size(); ++i) store(out[i], inv(x[i], dvec));
}

}  // namespace

const KernelTable kSsse3Kernels{"ssse3", multiply_batch, conjugate_batch, inverse_batch};

}  // namespace crg::packed::detail

#endif
