#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "crg/hurwitz.hpp"

namespace crg {

/// Outcome of lifting a factorization of the standard Coxeter element c of
/// G(d,1,n) or G(d,d,n) to the generic cover.
struct LiftResult {
  /// Factorization of the cover's standard Coxeter element, factor-wise over f.
  Factorization lifted;
  /// 0-based index of the factor whose lift was solved for (the first
  /// diagonal for e = 1, the first factor moving n for e = d).
  std::size_t pivot;
  /// Product of the uncorrected lifts; conjugate to the cover Coxeter element.
  WreathElement near_product;
  /// [eps; d * (b'_1, ..., b'_n)]; near_product = delta * c_cover * delta^-1.
  WreathElement delta;
};

/// Lifts every factor to a cover reflection over it so that the lifted tuple
/// multiplies to the cover's standard Coxeter element exactly.
///
/// Non-pivot factors are lifted with twists/weights in {0,...,d-1}. Throws
/// std::invalid_argument if f is not a reflection factorization of
/// coxeter_element(f.params()).
LiftResult lift_factorization(const Factorization& f);

/// Same, with caller-chosen lifts for the non-pivot factors (the pivot entry
/// is ignored and recomputed). Each given lift must project onto its factor.
LiftResult lift_factorization(const Factorization& f, std::span<const WreathElement> arbitrary_lifts);

/// The representative lift used for non-pivot factors.
WreathElement canonical_lift(const Reflection& r);

struct ReflectionLength {
  /// Least number of reflections multiplying to g; nullopt if not found
  /// within the depth cap.
  std::optional<std::size_t> length;
  std::size_t depth_cap;
};

/// Breadth-first reflection length. Finite groups (|G| <= 10^6) give exact
/// answers. In a cover the search ranges over reflections whose weights lie in
/// [-W, W] with W = 1 + sum |a_k|, up to depth_cap factors.
ReflectionLength reflection_length(const WreathElement& g, std::size_t depth_cap = 8);

}  // namespace crg
