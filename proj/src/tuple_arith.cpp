#include "tuple_arith.hpp"

#include <mutex>
#include <stdexcept>

#include "crg/packed.hpp"

namespace crg::detail {

void TupleArith::apply(std::span<std::uint64_t> tuple, int letter) {
  const auto i = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
  if (i + 1 >= tuple.size()) throw std::out_of_range("braid letter outside the tuple");
  const auto a = tuple[i];
  const auto b = tuple[i + 1];
  if (letter > 0) {
    tuple[i] = b;
    tuple[i + 1] = conjugate(a, b);
  } else {
    tuple[i] = conjugate(b, inverse(a));
    tuple[i + 1] = a;
  }
}

namespace {

class PackedArith final : public TupleArith {
 public:
  explicit PackedArith(const GroupParams& params)
      : params_(params), d_(static_cast<std::uint8_t>(params.modulus())), kernels_(packed::active_kernels()) {}

  std::uint64_t encode(const WreathElement& x) override { return packed::pack(x); }
  WreathElement decode(std::uint64_t key) const override { return packed::unpack(key, params_); }
  bool thread_safe() const override { return true; }
  bool less(std::uint64_t a, std::uint64_t b) const override { return a < b; }

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) override {
    return packed::pack(packed::multiply(packed::unpack(a), packed::unpack(b), d_));
  }
  std::uint64_t inverse(std::uint64_t a) override {
    return packed::pack(packed::inverse(packed::unpack(a), d_));
  }

  void expand(std::span<const std::uint64_t> states, std::size_t m, std::uint64_t* out) override {
    if (m < 2) return;
    const std::size_t count = states.size() / m;
    const std::size_t moves = 2 * (m - 1);
    thread_local std::vector<packed::Lanes> lanes, inv, xs, bys, res;
    lanes.resize(states.size());
    inv.resize(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) lanes[k] = packed::unpack(states[k]);
    kernels_.inverse(lanes, inv, d_);

    // sigma_i:    (A, B) -> (B, B^-1 A B)          = (B, conj(A, B))
    // sigma_i^-1: (A, B) -> (A B A^-1, A)          = (conj(B, A^-1), A)
    xs.resize(count * moves);
    bys.resize(count * moves);
    res.resize(count * moves);
    for (std::size_t s = 0; s < count; ++s) {
      const std::size_t base = s * m;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t j = s * moves + 2 * i;
        xs[j] = lanes[base + i];
        bys[j] = lanes[base + i + 1];
        xs[j + 1] = lanes[base + i + 1];
        bys[j + 1] = inv[base + i];
      }
    }
    kernels_.conjugate(xs, bys, res, d_);

    for (std::size_t s = 0; s < count; ++s) {
      const std::uint64_t* src = states.data() + s * m;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t j = s * moves + 2 * i;
        std::uint64_t* plus = out + j * m;
        std::uint64_t* minus = plus + m;
        std::copy(src, src + m, plus);
        std::copy(src, src + m, minus);
        plus[i] = src[i + 1];
        plus[i + 1] = packed::pack(res[j]);
        minus[i] = packed::pack(res[j + 1]);
        minus[i + 1] = src[i];
      }
    }
  }

 private:
  GroupParams params_;
  std::uint8_t d_;
  const packed::KernelTable& kernels_;
};

// Interns elements; keys are indices into the table. Covers and large finite
// groups go through here.
class InternedArith final : public TupleArith {
 public:
  explicit InternedArith(const GroupParams& params) : params_(params) {}

  std::uint64_t encode(const WreathElement& x) override {
    auto [it, inserted] = index_.try_emplace(x, elements_.size());
    if (inserted) elements_.push_back(x);
    return it->second;
  }
  WreathElement decode(std::uint64_t key) const override { return elements_.at(key); }
  bool thread_safe() const override { return false; }
  bool less(std::uint64_t a, std::uint64_t b) const override { return elements_[a] < elements_[b]; }

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) override {
    auto [it, inserted] = products_.try_emplace({a, b}, 0);
    if (inserted) it->second = encode(elements_[a] * elements_[b]);
    return it->second;
  }
  std::uint64_t inverse(std::uint64_t a) override {
    auto [it, inserted] = inverses_.try_emplace(a, 0);
    if (inserted) it->second = encode(crg::inverse(elements_[a]));
    return it->second;
  }

  void expand(std::span<const std::uint64_t> states, std::size_t m, std::uint64_t* out) override {
    if (m < 2) return;
    const std::size_t moves = 2 * (m - 1);
    for (std::size_t s = 0; s < states.size() / m; ++s) {
      const auto src = states.subspan(s * m, m);
      for (std::size_t j = 0; j < moves; ++j) {
        std::span<std::uint64_t> dst(out + (s * moves + j) * m, m);
        std::copy(src.begin(), src.end(), dst.begin());
        apply(dst, letter_of_neighbour(j));
      }
    }
  }

 private:
  GroupParams params_;
  std::vector<WreathElement> elements_;
  std::map<WreathElement, std::uint64_t> index_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> products_;
  std::map<std::uint64_t, std::uint64_t> inverses_;
};

}  // namespace

std::unique_ptr<TupleArith> TupleArith::make(const GroupParams& params) {
  if (packed::packable(params)) return std::make_unique<PackedArith>(params);
  return std::make_unique<InternedArith>(params);
}

}  // namespace crg::detail
