#include "crg/lift.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crg/errors.hpp"

namespace crg {

namespace {

WreathElement reparam(const WreathElement& x, const GroupParams& params) {
  return WreathElement(params, x.perm(), std::vector<Weight>(x.weights().begin(), x.weights().end()));
}

std::size_t find_pivot(const Factorization& f) {
  const auto& params = f.params();
  const int last = params.rank() - 1;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& r = f[k];
    if (params.family() == Family::One) {
      if (r.is_diagonal()) return k;
    } else if (r.is_transposition() && r.as_transposition().j == last) {
      return k;
    }
  }
  throw InternalError("no admissible pivot factor in a factorization of the Coxeter element");
}

}  // namespace

WreathElement canonical_lift(const Reflection& r) {
  const auto cover = r.params().as_cover();
  if (r.is_diagonal()) return WreathElement::diagonal(cover, r.as_diagonal().position, r.as_diagonal().weight);
  const auto& t = r.as_transposition();
  return WreathElement::transposition(cover, t.i, t.j, t.twist);
}

LiftResult lift_factorization(const Factorization& f) {
  std::vector<WreathElement> lifts;
  lifts.reserve(f.size());
  for (const auto& r : f.factors()) lifts.push_back(canonical_lift(r));
  return lift_factorization(f, lifts);
}

LiftResult lift_factorization(const Factorization& f, std::span<const WreathElement> arbitrary_lifts) {
  const auto& params = f.params();
  if (params.is_cover()) throw std::invalid_argument("lift_factorization expects a finite group");
  if (!(f.product() == coxeter_element(params))) {
    throw std::invalid_argument("factorization does not multiply to the standard Coxeter element of " +
                                params.to_string());
  }
  if (arbitrary_lifts.size() != f.size()) throw std::invalid_argument("one lift per factor required");
  const int d = params.modulus();
  const int n = params.rank();
  const auto cover = params.as_cover();
  const auto cover_one = GroupParams::cover(Family::One, n);
  const auto target = coxeter_element(cover);

  const std::size_t pivot = find_pivot(f);
  std::vector<WreathElement> lifts;
  lifts.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k == pivot) {
      lifts.push_back(canonical_lift(f[k]));
      continue;
    }
    const auto& x = arbitrary_lifts[k];
    if (!(x.params() == cover) || !classify(x) || !(project(x, d) == f[k].element())) {
      throw std::invalid_argument("given lift " + x.to_string() + " does not lie over factor " +
                                  f[k].element().to_string());
    }
    lifts.push_back(x);
  }

  if (params.family() == Family::One) {
    // Transposition-like lifts have weight 0, so the pivot diagonal carries
    // whatever is left of total weight 1.
    Weight others = 0;
    for (std::size_t k = 0; k < lifts.size(); ++k) {
      if (k != pivot) others += total_weight(lifts[k]);
    }
    lifts[pivot] = WreathElement::diagonal(cover, f[pivot].as_diagonal().position, 1 - others);
  } else {
    // The weight at coordinate n of the product is affine in the pivot twist
    // with slope +-1; solve for weight -1.
    const auto& t = f[pivot].as_transposition();
    auto coord_n = [&](Weight twist) {
      lifts[pivot] = WreathElement::transposition(cover, t.i, t.j, twist);
      return tuple_product(cover, lifts).weight(n - 1);
    };
    const Weight v0 = coord_n(t.twist);
    const Weight v1 = coord_n(t.twist + d);
    const Weight slope = (v1 - v0) / d;
    if ((slope != 1 && slope != -1) || (-1 - v0) % d != 0) {
      throw InternalError("pivot twist does not control the last coordinate");
    }
    coord_n(t.twist + (-1 - v0) * slope);
  }

  const auto near = tuple_product(cover, lifts);
  if (!(near.perm() == target.perm())) throw InternalError("lifted product has the wrong permutation");
  std::vector<Weight> b(static_cast<std::size_t>(n));
  Weight b_sum = 0;
  for (int k = 0; k < n; ++k) {
    const Weight diff = near.weight(k) - target.weight(k);
    if (diff % d != 0) throw InternalError("lifted product does not project to c");
    b[static_cast<std::size_t>(k)] = diff / d;
    b_sum += diff / d;
  }
  if (b_sum != 0 || (params.family() == Family::Full && b.back() != 0)) {
    throw InternalError("cycle weights of the lifted product differ from the Coxeter element");
  }
  std::vector<Weight> delta_weights(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < n; ++k) {
    delta_weights[static_cast<std::size_t>(k)] =
        delta_weights[static_cast<std::size_t>(k - 1)] + d * b[static_cast<std::size_t>(k - 1)];
  }
  // delta generally has nonzero weight, so it lives in G(inf,1,n) even when
  // the factors live in G(inf,inf,n).
  WreathElement delta(cover_one, Permutation::identity(n), std::move(delta_weights));

  std::vector<Reflection> out;
  out.reserve(lifts.size());
  for (const auto& x : lifts) {
    auto y = reparam(conjugate(reparam(x, cover_one), delta), cover);
    auto r = classify(y);
    if (!r) throw InternalError("conjugated lift is not a reflection");
    out.push_back(std::move(*r));
  }
  Factorization lifted(cover, std::move(out));
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!(project(lifted[k].element(), d) == f[k].element())) throw InternalError("lift does not project back");
  }
  if (!(lifted.product() == target)) throw InternalError("lifted factorization misses the cover Coxeter element");
  return {std::move(lifted), pivot, near, delta};
}

// ------------------------------------------------------------ reflection length

namespace {

std::vector<WreathElement> window_reflections(const GroupParams& cover, Weight window) {
  const int n = cover.rank();
  std::vector<WreathElement> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (Weight k = -window; k <= window; ++k) out.push_back(WreathElement::transposition(cover, i, j, k));
    }
  }
  if (cover.family() == Family::One) {
    for (int i = 0; i < n; ++i) {
      for (Weight k = -window; k <= window; ++k) {
        if (k != 0) out.push_back(WreathElement::diagonal(cover, i, k));
      }
    }
  }
  return out;
}

}  // namespace

ReflectionLength reflection_length(const WreathElement& g, std::size_t depth_cap) {
  const auto& params = g.params();
  if (g.is_identity()) return {0, depth_cap};
  std::vector<WreathElement> gens;
  std::size_t state_cap = 1'000'000;
  if (params.is_cover()) {
    Weight window = 1;
    for (auto w : g.weights()) window += std::llabs(w);
    gens = window_reflections(params, window);
  } else {
    if (params.order() > 1'000'000) throw BudgetExceeded("group order exceeds 10^6 for reflection length");
    for (const auto& r : enumerate_reflections(params)) gens.push_back(r.element());
    depth_cap = params.order();
  }
  std::set<WreathElement> seen{WreathElement::identity(params)};
  std::vector<WreathElement> frontier{WreathElement::identity(params)};
  for (std::size_t depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<WreathElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = multiply(x, s);
        if (y == g) return {depth, depth_cap};
        if (seen.insert(y).second) {
          if (seen.size() > state_cap) return {std::nullopt, depth_cap};
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {std::nullopt, depth_cap};
}

}  // namespace crg
