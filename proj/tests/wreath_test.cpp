#include <doctest.h>

#include <random>

#include "crg/errors.hpp"
#include "crg/reflection.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace crg;
using namespace testing;

TEST_CASE("group parameters parse and validate") {
  CHECK(G("2,1,3") == GroupParams::finite(2, Family::One, 3));
  CHECK(G("3,3,2") == GroupParams::finite(3, Family::Full, 2));
  CHECK(G("inf,1,4").is_cover());
  CHECK(G("inf,inf,4").family() == Family::Full);
  CHECK(G("1,1,3").family() == Family::One);
  CHECK(G("2,1,2").order() == 8);
  CHECK(G("3,3,3").order() == 54);
  CHECK(G("4,4,3").to_string() == "4,4,3");
  CHECK(G(" inf , inf , 3").to_string() == "inf,inf,3");
  for (const char* bad : {"2,1", "0,1,3", "2,3,3", "inf,2,3", "2,inf,3", "2,1,1", "x,1,2", "2,1,65", "4,2,3"}) {
    CHECK_THROWS_AS(GroupParams::parse(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(G("inf,1,3").modulus(), std::logic_error);
}

TEST_CASE("multiply examples") {
  const auto g = G("2,1,2");
  CHECK(elem(g, {1, 2}, {0, 0}) * elem(g, {2, 1}, {0, 1}) == elem(g, {2, 1}, {0, 1}));
  CHECK(elem(g, {2, 1}, {0, 1}) * elem(g, {2, 1}, {1, 0}) == WreathElement::identity(g));

  // A product of reflections equal to the central element -1.
  const auto h = G("2,1,3");
  const auto x = elem(h, {2, 1, 3}, {0, 0, 0}) * elem(h, {2, 1, 3}, {1, 1, 0}) * elem(h, {1, 2, 3}, {0, 0, 1});
  CHECK(x == elem(h, {1, 2, 3}, {1, 1, 1}));

  CHECK_THROWS_AS(elem(g, {1, 2}, {0, 0}) * WreathElement::identity(G("3,1,2")), IncompatibleGroups);
}

TEST_CASE("inverse examples") {
  const auto g = G("2,1,2");
  CHECK(inverse(WreathElement::identity(g)) == WreathElement::identity(g));
  CHECK(inverse(elem(g, {1, 2}, {1, 0})) == elem(g, {1, 2}, {1, 0}));
  const auto h = G("3,1,2");
  CHECK(inverse(elem(h, {2, 1}, {0, 1})) == elem(h, {2, 1}, {2, 0}));
}

TEST_CASE("conjugate examples") {
  const auto g = G("2,1,2");
  const auto x = elem(g, {1, 2}, {1, 0});
  CHECK(conjugate(x, WreathElement::identity(g)) == x);
  CHECK(conjugate(x, elem(g, {2, 1}, {0, 0})) == elem(g, {1, 2}, {0, 1}));
  const auto c = G("inf,1,2");
  CHECK(conjugate(elem(c, {2, 1}, {1, -1}), elem(c, {1, 2}, {0, 2})) == elem(c, {2, 1}, {-1, 1}));
}

TEST_CASE("total weight, projection and order examples") {
  for (const char* text : {"2,1,2", "3,1,3", "5,1,4", "inf,1,3"}) {
    const auto p = G(text);
    CHECK(total_weight(WreathElement::identity(p)) == 0);
    CHECK(total_weight(coxeter_element(p)) == (p.is_cover() ? 1 : 1 % p.modulus()));
    for (Weight k : {0, 1, 2, 7}) CHECK(total_weight(WreathElement::transposition(p, 0, 1, k)) == 0);
  }
  const auto c = G("inf,1,2");
  CHECK(project(elem(c, {2, 1}, {-1, 1}), 2) == elem(G("2,1,2"), {2, 1}, {1, 1}));
  for (int d : {2, 3, 5}) {
    const auto c4 = G("inf,1,4");
    CHECK(project(WreathElement::diagonal(c4, 0, d), d).is_identity());
  }
  for (int n : {2, 3, 5}) {
    const auto cover = GroupParams::cover(Family::One, n);
    CHECK(project(coxeter_element(cover), 1) == WreathElement(GroupParams::finite(1, Family::One, n),
                                                              Permutation::cycle(n, n), std::vector<Weight>(static_cast<std::size_t>(n), 0)));
  }
  CHECK(element_order(WreathElement::identity(G("2,1,2"))) == 1);
  CHECK(element_order(coxeter_element(G("2,1,2"))) == 4);
  CHECK_FALSE(element_order(coxeter_element(G("inf,1,3"))).has_value());
  CHECK_FALSE(element_order(coxeter_element(G("inf,inf,3"))).has_value());
  CHECK(element_order(WreathElement::transposition(G("inf,inf,3"), 0, 1, 5)) == 2);
}

TEST_CASE("membership and normalization") {
  const auto g = G("3,3,3");
  CHECK_THROWS_AS(elem(g, {1, 2, 3}, {1, 0, 0}), std::invalid_argument);
  CHECK(elem(g, {1, 2, 3}, {1, 2, 0}).weight(1) == 2);
  CHECK(elem(G("3,1,2"), {1, 2}, {-1, 4}) == elem(G("3,1,2"), {1, 2}, {2, 1}));
  CHECK_THROWS_AS(elem(G("inf,inf,2"), {1, 2}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(elem(g, {1, 1, 3}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(elem(g, {1, 2}, {0, 0}), std::invalid_argument);
  CHECK(elem(g, {2, 3, 1}, {0, 1, 2}).to_string() == "[(2 3 1); (0,1,2)]");
}

TEST_CASE("cover weight overflow is reported") {
  const auto c = G("inf,1,2");
  const auto big = WreathElement::diagonal(c, 0, std::numeric_limits<Weight>::max());
  CHECK_THROWS_AS(big * big, WeightOverflow);
  CHECK_THROWS_AS(inverse(WreathElement::diagonal(c, 0, std::numeric_limits<Weight>::min())), WeightOverflow);
}

TEST_CASE("multiply agrees with the monomial-matrix oracle") {
  std::mt19937_64 rng(7);
  // Every group with d * n <= 12; exhaustive over pairs where that is cheap.
  for (int d = 1; d <= 6; ++d) {
    for (int n = 2; d * n <= 12 && n <= 6; ++n) {
      for (auto family : {Family::One, Family::Full}) {
        if (d == 1 && family == Family::Full) continue;
        const auto p = GroupParams::finite(d, family, n);
        CAPTURE(p.to_string());
        if (p.order() <= 400) {
          const auto all = oracle::all_elements(p);
          REQUIRE(all.size() == p.order());
          for (const auto& x : all) {
            for (const auto& y : all) REQUIRE(x * y == oracle::mul(x, y));
          }
        } else {
          for (int s = 0; s < 5'000; ++s) {
            const auto x = random_element(p, rng);
            const auto y = random_element(p, rng);
            REQUIRE(x * y == oracle::mul(x, y));
            REQUIRE(inverse(x) == oracle::inv(x));
          }
        }
      }
    }
  }
  for (const char* text : {"inf,1,3", "inf,inf,4"}) {
    const auto p = G(text);
    for (int s = 0; s < 5'000; ++s) {
      const auto x = random_element(p, rng, 6);
      const auto y = random_element(p, rng, 6);
      REQUIRE(x * y == oracle::mul(x, y));
      REQUIRE(inverse(x) == oracle::inv(x));
    }
  }
}

TEST_CASE("group laws") {
  for (const char* text : {"2,1,2", "2,2,3"}) {
    const auto p = G(text);
    const auto all = oracle::all_elements(p);
    const auto e = WreathElement::identity(p);
    for (const auto& x : all) {
      CHECK(x * e == x);
      CHECK(e * x == x);
      CHECK((x * inverse(x)).is_identity());
      CHECK(inverse(inverse(x)) == x);
    }
  }
  std::mt19937_64 rng(11);
  for (const char* text : {"3,1,3", "4,4,3", "inf,1,4", "inf,inf,3"}) {
    const auto p = G(text);
    for (int s = 0; s < 10'000; ++s) {
      const auto x = random_element(p, rng);
      const auto y = random_element(p, rng);
      const auto z = random_element(p, rng);
      REQUIRE((x * y) * z == x * (y * z));
      if (p.is_cover()) {
        REQUIRE(total_weight(x * y) == total_weight(x) + total_weight(y));
      } else {
        REQUIRE((total_weight(x * y) - total_weight(x) - total_weight(y)) % p.modulus() == 0);
      }
      if (p.family() == Family::Full) REQUIRE(total_weight(x) % (p.is_cover() ? 1 : p.modulus()) == 0);
    }
  }
}

TEST_CASE("projection is a homomorphism") {
  std::mt19937_64 rng(13);
  for (const char* text : {"inf,1,3", "inf,inf,4"}) {
    const auto p = G(text);
    for (int s = 0; s < 10'000; ++s) {
      const auto x = random_element(p, rng, 9);
      const auto y = random_element(p, rng, 9);
      for (int d : {1, 2, 3, 5}) {
        REQUIRE(project(x * y, d) == project(x, d) * project(y, d));
        // pi_1 forgets the weights entirely.
        REQUIRE(project(x, d).perm() == project(x, 1).perm());
        REQUIRE(project(x, 1).is_identity() == x.perm().is_identity());
      }
    }
  }
  CHECK_THROWS_AS(project(WreathElement::identity(G("2,1,2")), 2), std::invalid_argument);
}

TEST_CASE("power and order") {
  const auto p = G("3,1,3");
  for (const auto& x : oracle::all_elements(p)) {
    const auto k = element_order(x);
    REQUIRE(k.has_value());
    CHECK(power(x, *k).is_identity());
    auto y = x;
    for (std::uint64_t j = 1; j < *k; ++j, y = y * x) CHECK_FALSE(y.is_identity());
  }
}
