#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define CRG_AVX2 __attribute__((target("avx2")))

namespace crg::packed::detail {

namespace {

// Two elements per register; _mm256_shuffle_epi8 works per 128-bit half, which
// is exactly one element each.

CRG_AVX2 inline __m256i load2(const Lanes* l) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(l)); }
CRG_AVX2 inline void store2(Lanes* l, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(l), v); }

CRG_AVX2 inline __m256i high_mask() { return _mm256_set_epi64x(-1, 0, -1, 0); }
CRG_AVX2 inline __m256i modulus_vec(std::uint8_t d) {
  const auto w = static_cast<long long>(0x0101010101010101ULL * d);
  return _mm256_set_epi64x(w, 0, w, 0);
}

CRG_AVX2 inline __m256i reduce_weights(__m256i v, __m256i dvec) { return _mm256_min_epu8(v, _mm256_sub_epi8(v, dvec)); }

CRG_AVX2 inline __m256i mul2(__m256i x, __m256i y, __m256i dvec) {
  const __m256i offset = _mm256_set_epi64x(0x0808080808080808LL, 0, 0x0808080808080808LL, 0);
  __m256i ctrl = _mm256_add_epi8(_mm256_unpacklo_epi64(y, y), offset);
  __m256i gathered = _mm256_shuffle_epi8(x, ctrl);
  return reduce_weights(_mm256_add_epi8(gathered, _mm256_and_si256(y, high_mask())), dvec);
}

CRG_AVX2 inline __m256i inv2(const Lanes* x, __m256i dvec) {
  alignas(32) std::array<std::uint8_t, 32> p{};
  for (int e = 0; e < 2; ++e) {
    auto* q = p.data() + 16 * e;
    for (int k = 0; k < kMaxRank; ++k) q[x[e].bytes[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
    for (int k = 0; k < kMaxRank; ++k) q[8 + k] = static_cast<std::uint8_t>(8 + q[k]);
  }
  const __m256i ctrl = _mm256_load_si256(reinterpret_cast<const __m256i*>(p.data()));
  __m256i a = _mm256_and_si256(_mm256_shuffle_epi8(load2(x), ctrl), high_mask());
  __m256i neg = reduce_weights(_mm256_sub_epi8(dvec, a), dvec);
  return _mm256_or_si256(_mm256_andnot_si256(high_mask(), ctrl), neg);
}

CRG_AVX2 void multiply_batch(std::span<const Lanes> x, std::span<const Lanes> y, std::span<Lanes> out, std::uint8_t d) {
  const __m256i dvec = modulus_vec(d);
  std::size_t i = 0;
  for (; i + 2 <= out.size(); i += 2) store2(&out[i], mul2(load2(&x[i]), load2(&y[i]), dvec));
  for (; i < out.size(); ++i) out[i] = scalar_multiply(x[i], y[i], d);
}

CRG_AVX2 void conjugate_batch(std::span<const Lanes> x, std::span<const Lanes> by, std::span<Lanes> out, std::uint8_t d) {
  const __m256i dvec = modulus_vec(d);
  std::size_t i = 0;
  for (; i + 2 <= out.size(); i += 2) {
    __m256i b = load2(&by[i]);
    store2(&out[i], mul2(mul2(inv2(&by[i], dvec), load2(&x[i]), dvec), b, dvec));
  }
  for (; i < out.size(); ++i) {
    out[i] = scalar_multiply(scalar_multiply(scalar_inverse(by[i], d), x[i], d), by[i], d);
  }
}

CRG_AVX2 void inverse_batch(std::span<const Lanes> x, std::span<Lanes> out, std::uint8_t d) {
  const __m256i dvec = modulus_vec(d);
  std::size_t i = 0;
  for (; i + 2 <= out.size(); i += 2) store2(&out[i], inv2(&x[i], dvec));
  for (; i < out.size(); ++i) out[i] = scalar_inverse(x[i], d);
}

}  // namespace

const KernelTable kAvx2Kernels{"avx2", multiply_batch, conjugate_batch, inverse_batch};

}  // namespace crg::packed::detail

#endif
