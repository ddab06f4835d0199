#include "crg/reflection.hpp"

#include <deque>
#include <stdexcept>
#include <tuple>

#include "crg/errors.hpp"

namespace crg {

namespace {

Weight parity(Weight k) { return ((k % 2) + 2) % 2; }

}  // namespace

Reflection Reflection::transposition(const GroupParams& params, int i, int j, Weight twist) {
  if (i > j) {
    std::swap(i, j);
    twist = -twist;
  }
  auto r = classify(WreathElement::transposition(params, i, j, twist));
  if (!r) throw std::invalid_argument("not a reflection");
  return *r;
}

Reflection Reflection::diagonal(const GroupParams& params, int position, Weight weight) {
  auto r = classify(WreathElement::diagonal(params, position, weight));
  if (!r) throw std::invalid_argument("diagonal of weight " + std::to_string(weight) + " is not a reflection in " +
                                      params.to_string());
  return *r;
}

std::optional<Reflection> classify(const WreathElement& x) {
  const int n = x.rank();
  const auto& w = x.perm();
  std::vector<int> moved;
  for (int k = 0; k < n; ++k) {
    if (w(k) != k) moved.push_back(k);
  }
  if (moved.empty()) {
    int position = -1;
    for (int k = 0; k < n; ++k) {
      if (x.weight(k) == 0) continue;
      if (position >= 0) return std::nullopt;
      position = k;
    }
    if (position < 0) return std::nullopt;
    return Reflection(Diagonal{position, x.weight(position)}, x);
  }
  if (moved.size() != 2) return std::nullopt;
  const int i = moved[0];
  const int j = moved[1];
  for (int k = 0; k < n; ++k) {
    if (k != i && k != j && x.weight(k) != 0) return std::nullopt;
  }
  Weight sum = x.weight(i) + x.weight(j);
  if (!x.params().is_cover()) sum %= x.params().modulus();
  if (sum != 0) return std::nullopt;
  return Reflection(TranspositionLike{i, j, x.weight(j)}, x);
}

std::string ClassLabel::to_string() const {
  switch (tag) {
    case Tag::T: return "T";
    case Tag::D: return "D" + std::to_string(value);
    case Tag::TEven: return "T_even";
    case Tag::TOdd: return "T_odd";
    case Tag::W: return "W" + std::to_string(value);
  }
  return "?";
}

ClassLabel ClassLabel::parse(const std::string& text) {
  if (text == "T") return {Tag::T, 0};
  if (text == "T_even") return {Tag::TEven, 0};
  if (text == "T_odd") return {Tag::TOdd, 0};
  if (text.size() > 1 && (text[0] == 'D' || text[0] == 'W')) {
    return {text[0] == 'D' ? Tag::D : Tag::W, std::stoll(text.substr(1))};
  }
  throw std::invalid_argument("unknown class label '" + text + "'");
}

ClassLabel class_label(const Reflection& r, const GroupParams& params) {
  if (!(r.params() == params)) {
    throw std::invalid_argument("reflection " + r.element().to_string() + " is not a member of " + params.to_string());
  }
  if (r.is_diagonal()) {
    return {params.is_cover() ? ClassLabel::Tag::W : ClassLabel::Tag::D, r.as_diagonal().weight};
  }
  // G(d,d,2) is dihedral of order 2d; for even d (and for the infinite
  // dihedral cover) conjugation changes the twist by even amounts only.
  const bool dihedral_split =
      params.family() == Family::Full && params.rank() == 2 && (params.is_cover() || params.modulus() % 2 == 0);
  if (dihedral_split) {
    return {parity(r.as_transposition().twist) == 0 ? ClassLabel::Tag::TEven : ClassLabel::Tag::TOdd, 0};
  }
  return {ClassLabel::Tag::T, 0};
}

std::vector<Reflection> enumerate_reflections(const GroupParams& params) {
  if (params.is_cover()) throw std::invalid_argument("the generic cover has infinitely many reflections");
  const int n = params.rank();
  const int d = params.modulus();
  std::vector<Reflection> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < d; ++k) out.push_back(Reflection::transposition(params, i, j, k));
    }
  }
  if (params.family() == Family::One) {
    for (int i = 0; i < n; ++i) {
      for (int k = 1; k < d; ++k) out.push_back(Reflection::diagonal(params, i, k));
    }
  }
  return out;
}

std::set<WreathElement> conjugacy_class_brute(const Reflection& r, const GroupParams& params) {
  if (params.is_cover()) throw std::invalid_argument("conjugacy_class_brute needs a finite group");
  if (params.order() > 1'000'000) throw BudgetExceeded("group order exceeds 10^6 for brute-force conjugacy");
  if (!(r.params() == params)) throw std::invalid_argument("reflection is not a member of " + params.to_string());
  const auto generators = enumerate_reflections(params);
  std::set<WreathElement> seen{r.element()};
  std::deque<WreathElement> queue{r.element()};
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      auto y = conjugate(x, g.element());
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

WreathElement coxeter_element(const GroupParams& params) {
  const int n = params.rank();
  std::vector<Weight> a(static_cast<std::size_t>(n), 0);
  if (params.family() == Family::One) {
    a[static_cast<std::size_t>(n - 1)] = 1;
    return WreathElement(params, Permutation::cycle(n, n), std::move(a));
  }
  a[static_cast<std::size_t>(n - 2)] = 1;
  a[static_cast<std::size_t>(n - 1)] = -1;
  return WreathElement(params, Permutation::cycle(n, n - 1), std::move(a));
}

CoxeterNumberData coxeter_number(const GroupParams& params) {
  const auto reflections = enumerate_reflections(params);
  const int d = params.modulus();
  std::set<std::tuple<int, int, Weight>> hyperplanes;
  for (const auto& r : reflections) {
    if (r.is_diagonal()) {
      hyperplanes.emplace(r.as_diagonal().position, -1, 0);
    } else {
      const auto& t = r.as_transposition();
      hyperplanes.emplace(t.i, t.j, ((t.twist % d) + d) % d);
    }
  }
  const std::uint64_t rank = d == 1 ? static_cast<std::uint64_t>(params.rank() - 1) : static_cast<std::uint64_t>(params.rank());
  const std::uint64_t total = reflections.size() + hyperplanes.size();
  if (total % rank != 0) throw InternalError("rank does not divide |T| + |A|");
  return {reflections.size(), hyperplanes.size(), total / rank};
}

}  // namespace crg
