#include "kernels_internal.hpp"

namespace crg::packed::detail {

namespace {

void multiply_batch(std::span<const Lanes> x, std::span<const Lanes> y, std::span<Lanes> out, std::uint8_t d) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scalar_multiply(x[i], y[i], d);
}

void conjugate_batch(std::span<const Lanes> x, std::span<const Lanes> by, std::span<Lanes> out, std::uint8_t d) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = scalar_multiply(scalar_multiply(scalar_inverse(by[i], d), x[i], d), by[i], d);
  }
}

void inverse_batch(std::span<const Lanes> x, std::span<Lanes> out, std::uint8_t d) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scalar_inverse(x[i], d);
}

}  // namespace

const KernelTable kScalarKernels{"scalar", multiply_batch, conjugate_batch, inverse_batch};

}  // namespace crg::packed::detail
