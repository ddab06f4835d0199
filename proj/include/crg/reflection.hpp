#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "crg/wreath.hpp"

namespace crg {

/// [(i j); k] with i < j (0-based): weight -k at i, +k at j.
struct TranspositionLike {
  int i;
  int j;
  Weight twist;
  friend bool operator==(const TranspositionLike&, const TranspositionLike&) = default;
};

/// [eps; w e_position] with w != 0 (mod d in finite groups).
struct Diagonal {
  int position;
  Weight weight;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// A classified reflection. Only obtainable through classify() or the named
/// constructors, so the shape always matches the element.
class Reflection {
 public:
  using Kind = std::variant<TranspositionLike, Diagonal>;

  static Reflection transposition(const GroupParams& params, int i, int j, Weight twist);
  static Reflection diagonal(const GroupParams& params, int position, Weight weight);

  const Kind& kind() const { return kind_; }
  const WreathElement& element() const { return element_; }
  const GroupParams& params() const { return element_.params(); }
  bool is_diagonal() const { return std::holds_alternative<Diagonal>(kind_); }
  bool is_transposition() const { return std::holds_alternative<TranspositionLike>(kind_); }
  const Diagonal& as_diagonal() const { return std::get<Diagonal>(kind_); }
  const TranspositionLike& as_transposition() const { return std::get<TranspositionLike>(kind_); }

  friend bool operator==(const Reflection& a, const Reflection& b) { return a.element_ == b.element_; }
  friend std::strong_ordering operator<=>(const Reflection& a, const Reflection& b) { return a.element_ <=> b.element_; }

 private:
  Reflection(Kind kind, WreathElement element) : kind_(kind), element_(std::move(element)) {}
  friend std::optional<Reflection> classify(const WreathElement& x);

  Kind kind_;
  WreathElement element_;
};

/// Returns the reflection view of x, or nullopt when x is not a reflection of
/// its group (identity, two nonzero weights, a diagonal in an e = d group, ...).
std::optional<Reflection> classify(const WreathElement& x);

/// Conjugacy-class label of a reflection.
struct ClassLabel {
  enum class Tag : std::uint8_t {
    T,      ///< the transposition-like class
    D,      ///< finite diagonal class, value = weight residue in {1..d-1}
    TEven,  ///< dihedral parity class (G(d,d,2), d even; G(inf,inf,2)), even twist
    TOdd,   ///< same, odd twist
    W,      ///< cover diagonal class, value = exact integer weight
  };
  Tag tag;
  Weight value = 0;

  std::string to_string() const;
  static ClassLabel parse(const std::string& text);

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

/// Closed-form class label. Throws std::invalid_argument when r is not a
/// member of params.
ClassLabel class_label(const Reflection& r, const GroupParams& params);
inline ClassLabel class_label(const Reflection& r) { return class_label(r, r.params()); }

/// All reflections of a finite group, transposition-like first (by i, j,
/// twist), then diagonals (by position, weight). Throws on a cover.
std::vector<Reflection> enumerate_reflections(const GroupParams& params);

/// Closure of {r} under conjugation by the reflections of a finite group with
/// |G| <= 10^6. Throws BudgetExceeded above the cap.
std::set<WreathElement> conjugacy_class_brute(const Reflection& r, const GroupParams& params);

/// The standard Coxeter element: [(1 2 ... n); (0,...,0,1)] for e = 1 and
/// [(1 2 ... n-1)(n); (0,...,0,1,-1)] for e = d, in finite groups and covers.
WreathElement coxeter_element(const GroupParams& params);

struct CoxeterNumberData {
  std::uint64_t reflection_count;
  std::uint64_t hyperplane_count;
  std::uint64_t h;
};

/// h = (|T| + |A|) / rank. The symmetric group G(1,1,n) acts essentially on
/// an (n-1)-dimensional space, so its rank here is n - 1 and h = n.
CoxeterNumberData coxeter_number(const GroupParams& params);

}  // namespace crg
