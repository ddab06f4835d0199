#pragma once

// Randomized property suites shared by the unit tests (reduced counts) and
// the acceptance binary (full counts). Every suite uses a fixed seed.

#include <random>
#include <string>
#include <vector>

#include "crg/hurwitz.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

namespace properties {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool ok() const { return cases > 0 && failures == 0; }
};

inline std::vector<crg::GroupParams> groups() {
  using testing::G;
  return {G("2,1,3"), G("3,3,3"), G("4,1,2"), G("3,3,2"), G("2,1,4"), G("inf,1,3"), G("inf,inf,4")};
}

inline crg::WreathElement random_reflection(const crg::GroupParams& p, std::mt19937_64& rng) {
  const int n = p.rank();
  std::uniform_int_distribution<int> coord(0, n - 1);
  std::uniform_int_distribution<int> twist(-4, 4);
  const bool diagonals = p.family() == crg::Family::One && (p.is_cover() || p.modulus() > 1);
  std::bernoulli_distribution pick_diagonal(diagonals ? 0.35 : 0.0);
  if (pick_diagonal(rng)) {
    crg::Weight w = 0;
    while (p.is_cover() ? w == 0 : (w % p.modulus()) == 0) w = twist(rng);
    return crg::WreathElement::diagonal(p, coord(rng), w);
  }
  int i = coord(rng);
  int j = coord(rng);
  while (j == i) j = coord(rng);
  return crg::WreathElement::transposition(p, std::min(i, j), std::max(i, j), twist(rng));
}

inline oracle::Tuple random_tuple(const crg::GroupParams& p, std::size_t m, std::mt19937_64& rng) {
  oracle::Tuple t;
  for (std::size_t k = 0; k < m; ++k) t.push_back(random_reflection(p, rng));
  return t;
}

/// Runs body(group, rng) `cases` times, cycling through the groups.
template <typename Body>
Outcome run(std::size_t cases, std::uint64_t seed, Body&& body) {
  std::mt19937_64 rng(seed);
  const auto gs = groups();
  Outcome out;
  for (std::size_t c = 0; c < cases; ++c) {
    ++out.cases;
    if (!body(gs[c % gs.size()], rng)) ++out.failures;
  }
  return out;
}

inline std::size_t random_length(std::mt19937_64& rng, std::size_t lo = 2, std::size_t hi = 7) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Outcome product_preservation(std::size_t cases) {
  return run(cases, 101, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    auto t = random_tuple(p, random_length(rng), rng);
    const auto before = crg::tuple_product(p, t);
    const auto w = testing::random_word(t.size(), 1 + rng() % 20, rng);
    crg::apply_braid_in_place(t, w);
    return crg::tuple_product(p, t) == before;
  });
}

inline Outcome braid_relations(std::size_t cases) {
  return run(cases, 102, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    const auto t = random_tuple(p, random_length(rng, 3, 7), rng);
    const int m = static_cast<int>(t.size());
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 2));
    auto a = t;
    auto b = t;
    crg::apply_braid_in_place(a, testing::word({i, i + 1, i}));
    crg::apply_braid_in_place(b, testing::word({i + 1, i, i + 1}));
    return a == b;
  });
}

inline Outcome far_commutation(std::size_t cases) {
  return run(cases, 103, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    const auto t = random_tuple(p, random_length(rng, 4, 8), rng);
    const int m = static_cast<int>(t.size());
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 3));
    const int j = i + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 2 - i));
    const int si = rng() % 2 ? i : -i;
    const int sj = rng() % 2 ? j : -j;
    auto a = t;
    auto b = t;
    crg::apply_braid_in_place(a, testing::word({si, sj}));
    crg::apply_braid_in_place(b, testing::word({sj, si}));
    return a == b;
  });
}

inline Outcome inverse_law(std::size_t cases) {
  return run(cases, 104, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    const auto t = random_tuple(p, random_length(rng), rng);
    const auto w = testing::random_word(t.size(), 1 + rng() % 30, rng);
    auto a = t;
    crg::apply_braid_in_place(a, w);
    crg::apply_braid_in_place(a, w.inverse());
    const auto i = 1 + rng() % (t.size() - 1);
    auto b = t;
    crg::apply_move_in_place(b, i, +1);
    crg::apply_move_in_place(b, i, -1);
    return a == t && b == t;
  });
}

inline Outcome projection_equivariance(std::size_t cases) {
  return run(cases, 105, [](const crg::GroupParams&, std::mt19937_64& rng) {
    const auto cover = crg::GroupParams::cover(rng() % 2 ? crg::Family::One : crg::Family::Full, 2 + static_cast<int>(rng() % 3));
    auto t = random_tuple(cover, random_length(rng), rng);
    const int d = 2 + static_cast<int>(rng() % 4);
    auto down = [d](const oracle::Tuple& x) {
      oracle::Tuple y;
      for (const auto& e : x) y.push_back(crg::project(e, d));
      return y;
    };
    auto projected = down(t);
    const auto w = testing::random_word(t.size(), 1 + rng() % 10, rng);
    crg::apply_braid_in_place(t, w);
    crg::apply_braid_in_place(projected, w);
    return down(t) == projected;
  });
}

inline Outcome invariant_constancy(std::size_t cases) {
  return run(cases, 106, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    const auto t = random_tuple(p, random_length(rng), rng);
    const auto f = crg::Factorization::from_elements(p, t);
    const auto w = testing::random_word(t.size(), 1 + rng() % 50, rng);
    return crg::invariant_multiset(crg::apply_braid(f, w)) == crg::invariant_multiset(f);
  });
}

/// The subgroup invariants are costlier, so this suite runs on small finite groups.
inline Outcome subgroup_invariant_constancy(std::size_t cases) {
  return run(cases, 107, [](const crg::GroupParams&, std::mt19937_64& rng) {
    static const std::vector<crg::GroupParams> small{testing::G("2,1,3"), testing::G("3,3,3"), testing::G("4,1,2")};
    const auto& p = small[rng() % small.size()];
    const auto f = crg::Factorization::from_elements(p, random_tuple(p, random_length(rng, 2, 5), rng));
    const auto w = testing::random_word(f.size(), 1 + rng() % 50, rng);
    const auto a = crg::tuple_invariants_general(f);
    const auto b = crg::tuple_invariants_general(crg::apply_braid(f, w));
    return a.product == b.product && a.subgroup_size == b.subgroup_size && a.orbits == b.orbits;
  });
}

inline Outcome cabling_soundness(std::size_t cases) {
  return run(cases, 108, [](const crg::GroupParams& p, std::mt19937_64& rng) {
    const auto t = random_tuple(p, random_length(rng, 3, 8), rng);
    const std::size_t m = t.size();
    const std::size_t a = 1 + rng() % m;
    const std::size_t b = a + rng() % (m - a + 1);
    const crg::Interval interval{a, b};
    const auto cabled = crg::cable(t, interval);
    if (cabled.size() < 2) return true;
    const auto w = testing::random_word(cabled.size(), 1 + rng() % 12, rng);
    const auto [lifted, moved] = crg::lift_braid_through_cable(w, interval, m);
    auto full = t;
    crg::apply_braid_in_place(full, lifted);
    auto small = cabled;
    crg::apply_braid_in_place(small, w);
    return crg::cable(full, moved) == small;
  });
}

/// Exhaustive: every ordered pair of the group.
inline Outcome matrix_agreement(const crg::GroupParams& p) {
  Outcome out;
  const auto all = oracle::all_elements(p);
  for (const auto& x : all) {
    for (const auto& y : all) {
      ++out.cases;
      if (!(x * y == oracle::mul(x, y))) ++out.failures;
    }
  }
  return out;
}

}  // namespace properties
