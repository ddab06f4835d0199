#include "crg/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "crg/detail/symmetric_search.hpp"
#include "crg/errors.hpp"
#include "crg/reflection.hpp"

namespace crg {

namespace {

bool is_diagonal(const WreathElement& x) { return x.perm().is_identity(); }

Weight floor_mod(Weight w, int d) { return ((w % d) + d) % d; }

// A tuple together with the braid word that produced it from the stage input.
struct Tracker {
  std::vector<WreathElement> tuple;
  BraidWord word;

  void apply(const BraidWord& w) {
    apply_braid_in_place(tuple, w);
    word.append(w);
  }
  void apply(std::initializer_list<int> letters) { apply(BraidWord(std::vector<int>(letters))); }
};

Factorization to_factorization(const GroupParams& params, const std::vector<WreathElement>& tuple) {
  return Factorization::from_elements(params, tuple);
}

void check_certificate(const Factorization& input, const BraidWord& word, const Factorization& output) {
  if (!(apply_braid(input, word) == output)) throw InternalError("canonicalization certificate failed to replay");
}

std::size_t count_fronted_diagonals(const Factorization& f) {
  std::size_t k = 0;
  while (k < f.size() && f[k].is_diagonal()) ++k;
  for (std::size_t i = k; i < f.size(); ++i) {
    if (f[i].is_diagonal()) throw std::invalid_argument("factorization is not fronted: diagonal after a transposition");
  }
  return k;
}

Factorization sub_factorization(const Factorization& f, std::size_t lo, std::size_t hi) {
  std::vector<Reflection> factors(f.factors().begin() + static_cast<std::ptrdiff_t>(lo),
                                  f.factors().begin() + static_cast<std::ptrdiff_t>(hi));
  return Factorization(f.params(), std::move(factors));
}

void require_cover_d1n(const Factorization& f) {
  if (!f.params().is_cover() || f.params().family() != Family::One) {
    throw std::invalid_argument("expected a factorization in G(inf,1,n), got " + f.params().to_string());
  }
}

}  // namespace

Factorization CanonicalForm::realize() const {
  const auto params = GroupParams::cover(Family::One, n);
  std::vector<Reflection> factors;
  for (auto w : diag_weights) factors.push_back(Reflection::diagonal(params, 0, w));
  for (std::size_t p = 0; p < 2 * pair_count; ++p) factors.push_back(Reflection::transposition(params, 0, 1, 0));
  for (int k = 0; k + 1 < n; ++k) factors.push_back(Reflection::transposition(params, k, k + 1, 0));
  return Factorization(params, std::move(factors));
}

StageResult front_diagonals(const Factorization& f) {
  Tracker t{f.elements(), {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < t.tuple.size(); ++i) {
      if (!is_diagonal(t.tuple[i - 1]) && is_diagonal(t.tuple[i])) {
        t.apply({-static_cast<int>(i)});
        changed = true;
      }
    }
  }
  return {to_factorization(f.params(), t.tuple), std::move(t.word)};
}

StageResult push_diagonal_to_first_coordinate(const Factorization& f, std::size_t slot,
                                              const CanonicalizeOptions& options) {
  require_cover_d1n(f);
  const std::size_t k = count_fronted_diagonals(f);
  if (slot < 1 || slot > k) throw std::invalid_argument("slot does not hold a diagonal factor");
  const int position = f[slot - 1].as_diagonal().position;
  if (position == 0) return {f, {}};
  if (k == f.size()) throw std::invalid_argument("no transposition-like factor to push against");

  Tracker t{f.elements(), {}};
  // Diagonals commute, so these moves are plain swaps.
  for (std::size_t j = slot; j < k; ++j) t.apply({static_cast<int>(j)});

  auto suffix = detail::project_transpositions(f.factors().subspan(k));
  auto front = detail::braid_to_front(suffix, {0, static_cast<std::uint8_t>(position)}, options.search_budget);
  t.apply(front.shifted(static_cast<int>(k)));
  t.apply({static_cast<int>(k), static_cast<int>(k)});

  auto out = to_factorization(f.params(), t.tuple);
  if (out[k - 1].as_diagonal().position != 0) throw InternalError("diagonal did not reach the first coordinate");
  return {std::move(out), std::move(t.word)};
}

StageResult pair_reduce_dihedral(const Factorization& f) {
  const auto& params = f.params();
  if (f.size() % 2 == 0) throw std::invalid_argument("dihedral pair reduction needs an odd number of factors");
  for (const auto& r : f.factors()) {
    if (!r.is_transposition() || r.as_transposition().i != 0 || r.as_transposition().j != 1) {
      throw std::invalid_argument("dihedral pair reduction needs [(1 2); k] factors only");
    }
  }
  if (!(f.product() == WreathElement::transposition(params, 0, 1, 0))) {
    throw std::invalid_argument("dihedral block does not multiply to [(1 2); 0]");
  }
  Tracker t{f.elements(), {}};
  auto twist = [&](std::size_t i) { return t.tuple[i].weight(1); };

  // Equalize each leading pair inside the window (s, s+1, s+2) by a
  // subtractive Euclid on the twist differences; sum of |differences| drops
  // strictly each step.
  for (std::size_t s = 0; s + 2 < t.tuple.size(); s += 2) {
    const int p1 = static_cast<int>(s) + 1;
    const int p2 = static_cast<int>(s) + 2;
    while (true) {
      const Weight d1 = twist(s) - twist(s + 1);
      const Weight d2 = twist(s + 1) - twist(s + 2);
      if (d1 == 0) break;
      if (d2 == 0) {
        t.apply({p1, p2});
        continue;
      }
      const bool same_sign = (d1 > 0) == (d2 > 0);
      if (std::llabs(d1) >= std::llabs(d2)) {
        t.apply({same_sign ? -p2 : p2});
      } else {
        t.apply({same_sign ? p1 : -p1});
      }
    }
  }
  auto out = to_factorization(params, t.tuple);
  if (twist(t.tuple.size() - 1) != 0) throw InternalError("dihedral reduction did not end in [(1 2); 0]");
  return {std::move(out), std::move(t.word)};
}

ZeroPairsResult zero_pairs(const Factorization& f, std::size_t diag_count, std::size_t pair_count) {
  require_cover_d1n(f);
  const auto& params = f.params();
  const std::size_t m = f.size();
  if (diag_count < 1 || diag_count + 2 * pair_count > m) throw std::invalid_argument("zero_pairs: bad layout");
  const Interval block{1, diag_count};
  auto tuple = f.elements();
  Tracker c{cable(tuple, block), {}};
  if (!(c.tuple[0] == WreathElement::diagonal(params, 0, 1))) {
    throw std::invalid_argument("cabled diagonal block must be [eps; (1,0,...,0)]");
  }
  const auto r0 = WreathElement::transposition(params, 0, 1, 0);
  for (std::size_t p = 0; p < pair_count; ++p) {
    const auto& x = c.tuple[1 + 2 * p];
    if (!(x == c.tuple[2 + 2 * p]) || !classify(x) || !(x.perm() == r0.perm())) {
      throw std::invalid_argument("zero_pairs expects equal [(1 2); b] pairs after the diagonals");
    }
  }

  // The block Z sits at q; it walks right over each finished pair and back
  // at the end. Z r_b r_b -> Z r_(b-1) r_(b-1) under sigma_q sigma_q+1
  // sigma_q+1 sigma_q.
  int q = 1;
  for (std::size_t p = 0; p < pair_count; ++p) {
    while (true) {
      const Weight b = c.tuple[static_cast<std::size_t>(q)].weight(1);
      if (b == 0) break;
      if (b > 0) {
        c.apply({q, q + 1, q + 1, q});
      } else {
        c.apply({-q, -(q + 1), -(q + 1), -q});
      }
      const Weight after = c.tuple[static_cast<std::size_t>(q)].weight(1);
      if (after != (b > 0 ? b - 1 : b + 1) || !(c.tuple[static_cast<std::size_t>(q) + 1] == c.tuple[static_cast<std::size_t>(q)])) {
        throw InternalError("pair decrement cycle misbehaved");
      }
    }
    if (p + 1 < pair_count) {
      c.apply({q, q + 1});
      q += 2;
    }
  }
  while (q > 1) {
    c.apply({-(q - 1), -(q - 2)});
    q -= 2;
  }

  auto [lifted, interval] = lift_braid_through_cable(c.word, block, m);
  apply_braid_in_place(tuple, lifted);
  if (!(interval == block) || !(cable(tuple, interval) == c.tuple)) {
    throw InternalError("cabled word did not lift consistently");
  }
  return {to_factorization(params, tuple), std::move(c.word), std::move(lifted)};
}

CanonicalResult canonicalize_d1n(const Factorization& f, int d, const CanonicalizeOptions& options) {
  require_cover_d1n(f);
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  const auto& params = f.params();
  const int n = params.rank();
  if (!(f.product() == coxeter_element(params))) {
    throw std::invalid_argument("factorization does not multiply to the standard Coxeter element of " +
                                params.to_string());
  }
  const std::size_t m = f.size();
  BraidWord word;
  auto run = [&](const Factorization& in, StageResult stage) {
    if (options.verify_certificates) check_certificate(in, stage.word, stage.factorization);
    word.append(stage.word);
    return std::move(stage.factorization);
  };
  // Runs a stage on positions [lo, hi) and splices it back.
  auto run_on = [&](const Factorization& in, std::size_t lo, std::size_t hi, auto&& stage) {
    auto part = stage(sub_factorization(in, lo, hi));
    std::vector<Reflection> factors(in.factors().begin(), in.factors().end());
    std::copy(part.factorization.factors().begin(), part.factorization.factors().end(),
              factors.begin() + static_cast<std::ptrdiff_t>(lo));
    return run(in, {Factorization(params, std::move(factors)), part.word.shifted(static_cast<int>(lo))});
  };

  auto cur = run(f, front_diagonals(f));
  const std::size_t k = count_fronted_diagonals(cur);
  if (k == 0) throw InternalError("a factorization of the Coxeter element without diagonals");

  while (true) {
    std::size_t slot = 0;
    for (std::size_t s = 1; s <= k && slot == 0; ++s) {
      if (cur[s - 1].as_diagonal().position != 0) slot = s;
    }
    if (slot == 0) break;
    cur = run(cur, push_diagonal_to_first_coordinate(cur, slot, options));
  }

  const std::size_t suffix_len = m - k;
  if (suffix_len + 1 < static_cast<std::size_t>(n) || (suffix_len - static_cast<std::size_t>(n - 1)) % 2 != 0) {
    throw InternalError("transposition suffix length has the wrong parity");
  }
  const std::size_t pair_count = (suffix_len - static_cast<std::size_t>(n - 1)) / 2;
  {
    auto projected = detail::project_transpositions(cur.factors().subspan(k));
    auto w = detail::braid_to_staircase(projected, n, options.search_budget);
    auto next = apply_braid(cur, w.shifted(static_cast<int>(k)));
    cur = run(cur, {std::move(next), w.shifted(static_cast<int>(k))});
  }
  const std::size_t dihedral_end = k + 2 * pair_count + 1;
  for (std::size_t i = dihedral_end; i < m; ++i) {
    if (cur[i].as_transposition().twist != 0) throw InternalError("staircase twists must vanish");
  }

  cur = run_on(cur, k, dihedral_end, [](const Factorization& block) { return pair_reduce_dihedral(block); });
  {
    auto zp = zero_pairs(cur, k, pair_count);
    cur = run(cur, {std::move(zp.factorization), std::move(zp.word)});
  }

  // Diagonals now all sit in coordinate 1 and commute: sort by adjacent swaps.
  auto key = [d](const Reflection& r) {
    const Weight w = r.as_diagonal().weight;
    return std::make_pair(floor_mod(w, d), w);
  };
  {
    Tracker t{cur.elements(), {}};
    std::vector<Reflection> diag(cur.factors().begin(), cur.factors().begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t pass = 0; pass < k; ++pass) {
      for (std::size_t i = 1; i < k; ++i) {
        if (key(diag[i]) < key(diag[i - 1])) {
          std::swap(diag[i], diag[i - 1]);
          t.apply({static_cast<int>(i)});
        }
      }
    }
    cur = run(cur, {to_factorization(params, t.tuple), std::move(t.word)});
  }

  CanonicalForm form;
  form.n = n;
  form.pair_count = pair_count;
  for (std::size_t i = 0; i < k; ++i) form.diag_weights.push_back(cur[i].as_diagonal().weight);
  if (!(form.realize() == cur)) throw InternalError("canonicalization did not reach the canonical tuple");
  if (options.verify_certificates) check_certificate(f, word, cur);
  return {std::move(form), std::move(word)};
}

Factorization canonical_projection(const CanonicalForm& form, int d) {
  const auto realized = form.realize();
  const auto target = realized.params().with_modulus(d);
  std::vector<WreathElement> projected;
  for (const auto& r : realized.factors()) projected.push_back(project(r.element(), d));
  return Factorization::from_elements(target, projected);
}

}  // namespace crg
