#include <doctest.h>

#include "crg/errors.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace crg;
using namespace testing;

TEST_CASE("braid words") {
  CHECK_THROWS_AS(word({1, 0}), std::invalid_argument);
  BraidWord w;
  CHECK_THROWS_AS(w.push_back(0), std::invalid_argument);
  w.push_back(2);
  w.append(word({-1, 3}));
  CHECK(w == word({2, -1, 3}));
  CHECK(w.shifted(2) == word({4, -3, 5}));
  CHECK(w.inverse() == word({-3, 1, -2}));
  CHECK_THROWS_AS(check_braid(word({3}), 3), std::out_of_range);
  CHECK_NOTHROW(check_braid(word({-2}), 3));
}

TEST_CASE("apply_move examples") {
  const auto g = G("2,1,3");
  const auto f = fact(g, {diag(g, 1, 1), diag(g, 2, 1)});
  CHECK(apply_move(f, 1, +1) == fact(g, {diag(g, 2, 1), diag(g, 1, 1)}));

  const auto s = G("1,1,3");
  CHECK(apply_move(fact(s, {trans(s, 1, 2, 0), trans(s, 2, 3, 0)}), 1, +1) ==
        fact(s, {trans(s, 2, 3, 0), trans(s, 1, 3, 0)}));

  const auto h = G("2,1,2");
  const auto x = fact(h, {diag(h, 1, 1), trans(h, 1, 2, 0)});
  const auto y = fact(h, {trans(h, 1, 2, 0), diag(h, 2, 1)});
  CHECK(apply_move(x, 1, +1) == y);
  CHECK(apply_move(y, 1, -1) == x);
  CHECK_THROWS_AS(apply_move(x, 2, +1), std::out_of_range);
  CHECK_THROWS_AS(apply_move(x, 0, +1), std::out_of_range);
  CHECK_THROWS_AS(apply_move(x, 1, 2), std::out_of_range);
}

TEST_CASE("apply_braid examples") {
  const auto h = G("2,1,2");
  const auto f = fact(h, {diag(h, 1, 1), trans(h, 1, 2, 0)});
  CHECK(apply_braid(f, BraidWord{}) == f);
  CHECK(apply_braid(f, word({1, -1})) == f);
  // Dihedral conjugation r_k -> r_(2j-k).
  const auto c = G("inf,inf,2");
  CHECK(apply_braid(fact(c, {trans(c, 1, 2, 1), trans(c, 1, 2, 2), trans(c, 1, 2, 1)}), word({2})) ==
        fact(c, {trans(c, 1, 2, 1), trans(c, 1, 2, 1), trans(c, 1, 2, 0)}));
}

TEST_CASE("invariant_multiset examples") {
  const auto h = G("2,1,2");
  const auto f = fact(h, {diag(h, 1, 1), trans(h, 1, 2, 0)});
  CHECK(invariant_multiset(f) == std::vector<ClassLabel>{ClassLabel::parse("T"), ClassLabel::parse("D1")});
  CHECK(invariant_multiset(fact(h, {})).empty());
  CHECK(invariant_multiset(apply_move(f, 1, +1)) == invariant_multiset(f));
}

TEST_CASE("factorizations reject foreign factors") {
  CHECK_THROWS_AS(fact(G("2,1,2"), {diag(G("3,1,2"), 1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::from_elements(G("2,1,2"), std::vector{WreathElement::identity(G("2,1,2"))}),
                  std::invalid_argument);
}

TEST_CASE("cable examples") {
  const auto p = G("inf,1,3");
  std::vector<WreathElement> t;
  for (int k = 0; k < 5; ++k) t.push_back(WreathElement::diagonal(p, k % 3, k + 1) * WreathElement::transposition(p, 0, 1 + k % 2, k));
  CHECK(cable(t, {3, 3}) == t);
  CHECK(cable(t, {2, 4}) == std::vector{t[0], t[1] * t[2] * t[3], t[4]});
  CHECK(cable(t, {1, 3}) == std::vector{t[0] * t[1] * t[2], t[3], t[4]});
  CHECK_THROWS_AS(cable(t, {0, 2}), std::out_of_range);
  CHECK_THROWS_AS(cable(t, {3, 6}), std::out_of_range);
  CHECK_THROWS_AS(cable(t, {3, 2}), std::out_of_range);
}

TEST_CASE("lift_braid_through_cable examples") {
  auto [w0, i0] = lift_braid_through_cable(BraidWord{}, {2, 4}, 5);
  CHECK(w0.empty());
  CHECK(i0 == Interval{2, 4});
  // Words act left to right: the strand left of the block crosses it
  // starting from the block's first strand.
  auto [w1, i1] = lift_braid_through_cable(word({1}), {2, 4}, 5);
  CHECK(w1 == word({1, 2, 3}));
  CHECK(i1 == Interval{1, 3});
  auto [w2, i2] = lift_braid_through_cable(word({2}), {2, 4}, 5);
  CHECK(w2 == word({4, 3, 2}));
  CHECK(i2 == Interval{3, 5});
  auto [w3, i3] = lift_braid_through_cable(word({-1}), {2, 4}, 5);
  CHECK(w3 == word({-1, -2, -3}));
  CHECK(i3 == Interval{1, 3});
  auto [w4, i4] = lift_braid_through_cable(word({3, -3}), {1, 2}, 5);
  CHECK(w4 == word({4, -4}));
  CHECK(i4 == Interval{1, 2});
  CHECK_THROWS_AS(lift_braid_through_cable(word({3}), {2, 4}, 5), std::out_of_range);
}

TEST_CASE("tuple_invariants_general examples") {
  const auto h = G("2,1,2");
  const auto one = tuple_invariants_general(fact(h, {trans(h, 1, 2, 0)}));
  CHECK(one.product == trans(h, 1, 2, 0).element());
  CHECK(one.subgroup_size == 2);
  REQUIRE(one.orbits.size() == 1);
  CHECK(one.orbits[0] == std::vector{trans(h, 1, 2, 0).element()});

  const auto g = G("2,1,3");
  const auto triple = tuple_invariants_general(fact(g, {trans(g, 1, 2, 0), trans(g, 1, 2, 1), diag(g, 3, 1)}));
  CHECK(triple.product == elem(g, {1, 2, 3}, {1, 1, 1}));
  // Frozen from the closure computation: H = <(1 2), [(1 2);1], [eps; e_3]>
  // is (Klein four) x Z/2, every factor fixed by conjugation.
  CHECK(triple.subgroup_size == 8);
  CHECK(triple.orbits.size() == 3);
  for (const auto& o : triple.orbits) CHECK(o.size() == 1);

  for (const auto& f : oracle::factorizations(h, coxeter_element(h), 2)) {
    CHECK(tuple_invariants_general(Factorization::from_elements(h, f)).subgroup_size == 8);
  }
  CHECK_THROWS_AS(tuple_invariants_general(fact(G("inf,1,2"), {})), std::invalid_argument);
}

TEST_CASE("property suites (reduced)") {
  CHECK(properties::product_preservation(2'000).ok());
  CHECK(properties::braid_relations(2'000).ok());
  CHECK(properties::far_commutation(2'000).ok());
  CHECK(properties::inverse_law(2'000).ok());
  CHECK(properties::projection_equivariance(2'000).ok());
  CHECK(properties::invariant_constancy(2'000).ok());
  CHECK(properties::subgroup_invariant_constancy(200).ok());
  CHECK(properties::cabling_soundness(2'000).ok());
}
