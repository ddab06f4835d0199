#include "crg/wreath.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "crg/errors.hpp"

namespace crg {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bad transposition indices");
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::cycle(int n, int len) {
  if (len < 1 || len > n) throw std::invalid_argument("bad cycle length");
  auto p = identity(n);
  for (int k = 0; k < len; ++k) p.images_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((k + 1) % len);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) p.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = k; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t j = k; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return cycles;
}

Permutation operator*(const Permutation& w, const Permutation& u) {
  if (w.size() != u.size()) throw std::invalid_argument("permutation sizes differ");
  Permutation p;
  p.images_.resize(u.images_.size());
  for (std::size_t k = 0; k < u.images_.size(); ++k) p.images_[k] = w.images_[u.images_[k]];
  return p;
}

// ------------------------------------------------------------- WreathElement

namespace {

Weight reduce(Weight v, int d) {
  Weight r = v % d;
  return r < 0 ? r + d : r;
}

Weight checked_add(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) throw WeightOverflow("cover weight overflow");
  return out;
}

Weight checked_neg(Weight a) {
  Weight out;
  if (__builtin_sub_overflow(Weight{0}, a, &out)) throw WeightOverflow("cover weight overflow");
  return out;
}

}  // namespace

WreathElement::WreathElement(GroupParams params, Permutation perm, std::vector<Weight> weights)
    : params_(params), perm_(std::move(perm)), weights_(std::move(weights)) {
  if (perm_.size() != params_.rank() || static_cast<int>(weights_.size()) != params_.rank()) {
    throw std::invalid_argument("element size does not match group rank " + std::to_string(params_.rank()));
  }
  if (!params_.is_cover()) {
    for (auto& w : weights_) w = reduce(w, params_.modulus());
  }
  if (params_.family() == Family::Full && total_weight(*this) != 0) {
    throw std::invalid_argument("element " + to_string() + " has nonzero weight in " + params_.to_string());
  }
}

WreathElement WreathElement::identity(const GroupParams& params) {
  return WreathElement(Trusted{}, params, Permutation::identity(params.rank()),
                       std::vector<Weight>(static_cast<std::size_t>(params.rank()), 0));
}

WreathElement WreathElement::diagonal(const GroupParams& params, int position, Weight w) {
  std::vector<Weight> a(static_cast<std::size_t>(params.rank()), 0);
  a.at(static_cast<std::size_t>(position)) = w;
  return WreathElement(params, Permutation::identity(params.rank()), std::move(a));
}

WreathElement WreathElement::transposition(const GroupParams& params, int i, int j, Weight twist) {
  std::vector<Weight> a(static_cast<std::size_t>(params.rank()), 0);
  a.at(static_cast<std::size_t>(i)) = checked_neg(twist);
  a.at(static_cast<std::size_t>(j)) = twist;
  return WreathElement(params, Permutation::transposition(params.rank(), i, j), std::move(a));
}

bool WreathElement::is_identity() const {
  if (!perm_.is_identity()) return false;
  for (auto w : weights_) {
    if (w != 0) return false;
  }
  return true;
}

std::string WreathElement::to_string() const {
  std::ostringstream os;
  os << "[(";
  for (int k = 0; k < rank(); ++k) os << (k ? " " : "") << perm_(k) + 1;
  os << "); (";
  for (int k = 0; k < rank(); ++k) os << (k ? "," : "") << weights_[static_cast<std::size_t>(k)];
  os << ")]";
  return os.str();
}

std::strong_ordering operator<=>(const WreathElement& x, const WreathElement& y) {
  if (auto c = x.perm_ <=> y.perm_; c != 0) return c;
  return x.weights_ <=> y.weights_;
}

WreathElement multiply(const WreathElement& x, const WreathElement& y) {
  if (!(x.params_ == y.params_)) {
    throw IncompatibleGroups("cannot multiply elements of " + x.params_.to_string() + " and " + y.params_.to_string());
  }
  const auto n = x.weights_.size();
  const auto& u = y.perm_;
  std::vector<Weight> out(n);
  if (x.params_.is_cover()) {
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = checked_add(x.weights_[static_cast<std::size_t>(u(static_cast<int>(k)))], y.weights_[k]);
    }
  } else {
    const int d = x.params_.modulus();
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = (x.weights_[static_cast<std::size_t>(u(static_cast<int>(k)))] + y.weights_[k]) % d;
    }
  }
  return WreathElement(WreathElement::Trusted{}, x.params_, x.perm_ * u, std::move(out));
}

WreathElement inverse(const WreathElement& x) {
  // [w; a]^-1 = [w^-1; b] with b_k = -a_{w^-1(k)}.
  auto winv = x.perm_.inverse();
  const auto n = x.weights_.size();
  std::vector<Weight> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Weight a = x.weights_[static_cast<std::size_t>(winv(static_cast<int>(k)))];
    out[k] = x.params_.is_cover() ? checked_neg(a) : reduce(-a, x.params_.modulus());
  }
  return WreathElement(WreathElement::Trusted{}, x.params_, std::move(winv), std::move(out));
}

WreathElement conjugate(const WreathElement& x, const WreathElement& by) {
  return multiply(multiply(inverse(by), x), by);
}

Weight total_weight(const WreathElement& x) {
  Weight sum = 0;
  if (x.params().is_cover()) {
    for (auto w : x.weights()) sum = checked_add(sum, w);
    return sum;
  }
  for (auto w : x.weights()) sum += w;
  return sum % x.params().modulus();
}

WreathElement project(const WreathElement& x, int d) {
  if (!x.params_.is_cover()) throw std::invalid_argument("project expects a generic-cover element");
  auto target = x.params_.with_modulus(d);
  std::vector<Weight> out(x.weights_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = reduce(x.weights_[k], d);
  return WreathElement(WreathElement::Trusted{}, target, x.perm_, std::move(out));
}

WreathElement power(const WreathElement& x, std::uint64_t k) {
  auto result = WreathElement::identity(x.params());
  auto base = x;
  while (k) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k) base = multiply(base, base);
  }
  return result;
}

std::optional<std::uint64_t> element_order(const WreathElement& x) {
  // x^L is diagonal for L the permutation order; its order finishes the job.
  const auto perm_order = x.perm().order();
  auto diag = power(x, perm_order);
  if (diag.is_identity()) return perm_order;
  if (x.params().is_cover()) return std::nullopt;
  const int d = x.params().modulus();
  std::uint64_t diag_order = 1;
  for (auto w : diag.weights()) {
    diag_order = std::lcm(diag_order, static_cast<std::uint64_t>(d / std::gcd(static_cast<int>(w), d)));
  }
  return perm_order * diag_order;
}

}  // namespace crg
