#pragma once

#include <cstddef>
#include <vector>

#include "crg/hurwitz.hpp"

namespace crg {

/// Canonical representative of a Hurwitz orbit of reflection factorizations
/// of the standard Coxeter element of G(inf,1,n):
///
///   [eps; (w_1,0,...,0)], ..., [eps; (w_k,0,...,0)],
///   [(1 2); 0] x (2 * pair_count),
///   [(1 2); 0], [(2 3); 0], ..., [(n-1 n); 0]
///
/// with diag_weights sorted by (w mod d, w).
struct CanonicalForm {
  std::vector<Weight> diag_weights;
  std::size_t pair_count = 0;
  int n = 0;

  /// The tuple above as a factorization in G(inf,1,n).
  Factorization realize() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// A tuple after a canonicalization stage with the braid word taking the
/// stage's input to it.
struct StageResult {
  Factorization factorization;
  BraidWord word;
};

struct CanonicalizeOptions {
  /// State budget for each symmetric-group search.
  std::size_t search_budget = 1'000'000;
  /// Replay every stage certificate against its input; InternalError on mismatch.
  bool verify_certificates = true;
};

/// Moves every diagonal factor in front of the transposition-like ones using
/// sigma^-1 moves; the transposition-like factors are left untouched.
StageResult front_diagonals(const Factorization& f);

/// f must be fronted, with the factor at 1-based `slot` diagonal. Moves that
/// diagonal to the last diagonal slot k and puts its weight in coordinate 1.
/// Already-normalized diagonals stay normalized.
StageResult push_diagonal_to_first_coordinate(const Factorization& f, std::size_t slot,
                                              const CanonicalizeOptions& options = {});

/// f: odd-length tuple of [(1 2); *] reflections with product [(1 2); 0].
/// Returns (r_b1, r_b1, r_b2, r_b2, ..., [(1 2); 0]).
StageResult pair_reduce_dihedral(const Factorization& f);

struct ZeroPairsResult {
  Factorization factorization;
  /// Word on the tuple with the first diag_count factors cabled.
  BraidWord cabled_word;
  /// The same word lifted to the full tuple.
  BraidWord word;
};

/// f = (diagonals with product [eps; (1,0,...,0)] in slots 1..diag_count,
/// pairs (r_b, r_b), ..., anything). Turns every pair into ([(1 2);0],
/// [(1 2);0]); pair_count pairs are processed.
ZeroPairsResult zero_pairs(const Factorization& f, std::size_t diag_count, std::size_t pair_count);

struct CanonicalResult {
  CanonicalForm form;
  /// Takes the input to form.realize().
  BraidWord word;
};

/// Reduces a reflection factorization of the standard Coxeter element of
/// G(inf,1,n) to its canonical form; d only fixes the diagonal order. Throws
/// std::invalid_argument on a bad input and BudgetExceeded when a search stage
/// runs out of budget.
CanonicalResult canonicalize_d1n(const Factorization& f, int d, const CanonicalizeOptions& options = {});

/// pi_d of the realized canonical tuple, in G(d,1,n). Throws
/// std::invalid_argument when some weight is divisible by d.
Factorization canonical_projection(const CanonicalForm& form, int d);

}  // namespace crg
