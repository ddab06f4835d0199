#include "crg/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "crg/errors.hpp"

namespace crg {

// ----------------------------------------------------------------- BraidWord

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0) throw std::invalid_argument("braid letter 0 is invalid (letters are 1-indexed)");
  }
}

void BraidWord::push_back(int letter) {
  if (letter == 0) throw std::invalid_argument("braid letter 0 is invalid (letters are 1-indexed)");
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::shifted(int offset) const {
  BraidWord out;
  out.letters_.reserve(letters_.size());
  for (int l : letters_) out.letters_.push_back(l > 0 ? l + offset : l - offset);
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

// ------------------------------------------------------------- Factorization

namespace {

WreathElement product_of(const GroupParams& params, std::span<const Reflection> factors) {
  auto p = WreathElement::identity(params);
  for (const auto& r : factors) p = multiply(p, r.element());
  return p;
}

}  // namespace

Factorization::Factorization(GroupParams params, std::vector<Reflection> factors)
    : params_(params), factors_(std::move(factors)), product_(WreathElement::identity(params)) {
  for (const auto& r : factors_) {
    if (!(r.params() == params_)) {
      throw std::invalid_argument("factor " + r.element().to_string() + " is not in " + params_.to_string());
    }
  }
  product_ = product_of(params_, factors_);
}

Factorization Factorization::from_elements(const GroupParams& params, std::span<const WreathElement> elements) {
  std::vector<Reflection> factors;
  factors.reserve(elements.size());
  for (const auto& x : elements) {
    auto r = classify(x);
    if (!r) throw std::invalid_argument(x.to_string() + " is not a reflection of " + params.to_string());
    factors.push_back(std::move(*r));
  }
  return Factorization(params, std::move(factors));
}

std::vector<WreathElement> Factorization::elements() const {
  std::vector<WreathElement> out;
  out.reserve(factors_.size());
  for (const auto& r : factors_) out.push_back(r.element());
  return out;
}

// ---------------------------------------------------------------- tuple level

WreathElement tuple_product(const GroupParams& params, std::span<const WreathElement> tuple) {
  auto p = WreathElement::identity(params);
  for (const auto& x : tuple) p = multiply(p, x);
  return p;
}

void check_braid(const BraidWord& w, std::size_t m) {
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(l < 0 ? -l : l);
    if (i < 1 || i + 1 > m) {
      throw std::out_of_range("braid letter " + std::to_string(l) + " invalid for a tuple of length " + std::to_string(m));
    }
  }
}

void apply_move_in_place(std::vector<WreathElement>& tuple, std::size_t i, int sign) {
  if (i < 1 || i + 1 > tuple.size() || (sign != 1 && sign != -1)) {
    throw std::out_of_range("Hurwitz move " + std::to_string(i) + " invalid for a tuple of length " +
                            std::to_string(tuple.size()));
  }
  auto& left = tuple[i - 1];
  auto& right = tuple[i];
  if (sign > 0) {
    auto moved = conjugate(left, right);
    left = std::move(right);
    right = std::move(moved);
  } else {
    auto moved = conjugate(right, inverse(left));
    right = std::move(left);
    left = std::move(moved);
  }
}

void apply_braid_in_place(std::vector<WreathElement>& tuple, const BraidWord& w) {
  check_braid(w, tuple.size());
  for (int l : w.letters()) apply_move_in_place(tuple, static_cast<std::size_t>(l < 0 ? -l : l), l < 0 ? -1 : 1);
}

// ------------------------------------------------------- factorization level

namespace {

Factorization reclassify(const GroupParams& params, const std::vector<WreathElement>& tuple) {
  std::vector<Reflection> factors;
  factors.reserve(tuple.size());
  for (const auto& x : tuple) {
    auto r = classify(x);
    if (!r) throw InternalError("Hurwitz move produced non-reflection " + x.to_string());
    factors.push_back(std::move(*r));
  }
  return Factorization(params, std::move(factors));
}

}  // namespace

Factorization apply_move(const Factorization& f, std::size_t i, int sign) {
  auto tuple = f.elements();
  apply_move_in_place(tuple, i, sign);
  return reclassify(f.params(), tuple);
}

Factorization apply_braid(const Factorization& f, const BraidWord& w) {
  auto tuple = f.elements();
  apply_braid_in_place(tuple, w);
  return reclassify(f.params(), tuple);
}

std::vector<ClassLabel> invariant_multiset(const Factorization& f) {
  std::vector<ClassLabel> out;
  out.reserve(f.size());
  for (const auto& r : f.factors()) out.push_back(class_label(r, f.params()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WreathElement> cable(std::span<const WreathElement> tuple, Interval interval) {
  if (interval.a < 1 || interval.a > interval.b || interval.b > tuple.size()) {
    throw std::out_of_range("invalid cabling interval");
  }
  std::vector<WreathElement> out(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(interval.a - 1));
  auto block = tuple[interval.a - 1];
  for (std::size_t k = interval.a; k < interval.b; ++k) block = multiply(block, tuple[k]);
  out.push_back(std::move(block));
  out.insert(out.end(), tuple.begin() + static_cast<std::ptrdiff_t>(interval.b), tuple.end());
  return out;
}

std::pair<BraidWord, Interval> lift_braid_through_cable(const BraidWord& w, Interval interval, std::size_t m) {
  if (interval.a < 1 || interval.a > interval.b || interval.b > m) throw std::out_of_range("invalid cabling interval");
  const std::size_t width = interval.b - interval.a;
  check_braid(w, m - width);
  BraidWord out;
  auto [a, b] = interval;
  for (int letter : w.letters()) {
    const int sign = letter < 0 ? -1 : 1;
    const auto i = static_cast<std::size_t>(letter * sign);
    if (i + 1 < a) {
      out.push_back(letter);
    } else if (i > a) {
      out.push_back(sign * static_cast<int>(i + width));
    } else if (i + 1 == a) {
      // The strand left of the block crosses every strand of the block.
      for (std::size_t j = a - 1; j <= b - 1; ++j) out.push_back(sign * static_cast<int>(j));
      --a;
      --b;
    } else {
      // The strand right of the block crosses it, nearest strand first.
      for (std::size_t j = b; j >= a; --j) out.push_back(sign * static_cast<int>(j));
      ++a;
      ++b;
    }
  }
  return {std::move(out), Interval{a, b}};
}

TupleInvariants tuple_invariants_general(const Factorization& f, std::size_t subgroup_cap) {
  const auto& params = f.params();
  if (params.is_cover()) throw std::invalid_argument("tuple invariants need a finite group");
  const auto gens = f.elements();

  std::set<WreathElement> subgroup{WreathElement::identity(params)};
  std::deque<WreathElement> queue{WreathElement::identity(params)};
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = multiply(x, g);
      if (subgroup.insert(y).second) {
        if (subgroup.size() > subgroup_cap) throw BudgetExceeded("generated subgroup exceeds cap");
        queue.push_back(std::move(y));
      }
    }
  }

  std::vector<std::vector<WreathElement>> orbits;
  for (const auto& t : gens) {
    std::set<WreathElement> orbit{t};
    std::deque<WreathElement> q{t};
    while (!q.empty()) {
      auto x = std::move(q.front());
      q.pop_front();
      for (const auto& g : gens) {
        for (auto y : {conjugate(x, g), conjugate(x, inverse(g))}) {
          if (orbit.insert(y).second) q.push_back(std::move(y));
        }
      }
    }
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(orbits.begin(), orbits.end());
  return {f.product(), subgroup.size(), std::move(orbits)};
}

}  // namespace crg
