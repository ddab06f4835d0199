#include <doctest.h>

#include <random>
#include <set>

#include "crg/errors.hpp"
#include "crg/reflection.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace crg;
using namespace testing;

namespace {

// Finite groups of order at most 10^4 used for the exhaustive cross-checks.
std::vector<GroupParams> small_groups() {
  std::vector<GroupParams> out;
  for (int d = 1; d <= 6; ++d) {
    for (int n = 2; n <= 4; ++n) {
      for (auto family : {Family::One, Family::Full}) {
        if (d == 1 && family == Family::Full) continue;
        const auto p = GroupParams::finite(d, family, n);
        if (p.order() <= 10'000) out.push_back(p);
      }
    }
  }
  return out;
}

ClassLabel label(const char* text) { return ClassLabel::parse(text); }

}  // namespace

TEST_CASE("enumerate_reflections examples") {
  const auto g = G("2,1,2");
  const auto refl = enumerate_reflections(g);
  REQUIRE(refl.size() == 4);
  CHECK(refl[0].element() == elem(g, {2, 1}, {0, 0}));
  CHECK(refl[1].element() == elem(g, {2, 1}, {1, 1}));
  CHECK(refl[2].element() == elem(g, {1, 2}, {1, 0}));
  CHECK(refl[3].element() == elem(g, {1, 2}, {0, 1}));
  CHECK(enumerate_reflections(G("3,3,3")).size() == 9);
  CHECK(enumerate_reflections(G("2,2,2")).size() == 2);
  CHECK_THROWS_AS(enumerate_reflections(G("inf,1,2")), std::invalid_argument);
}

TEST_CASE("enumerate_reflections matches the fixed-space oracle") {
  for (const auto& p : small_groups()) {
    CAPTURE(p.to_string());
    std::set<WreathElement> want;
    for (const auto& x : oracle::reflections(p)) want.insert(x);
    std::set<WreathElement> got;
    for (const auto& r : enumerate_reflections(p)) {
      got.insert(r.element());
      const auto back = classify(r.element());
      REQUIRE(back.has_value());
      CHECK(*back == r);
      CHECK(back->kind() == r.kind());
    }
    CHECK(got == want);
    // Nothing else classifies as a reflection.
    for (const auto& x : oracle::all_elements(p)) CHECK(classify(x).has_value() == (want.count(x) == 1));
  }
}

TEST_CASE("classify examples") {
  CHECK_FALSE(classify(WreathElement::identity(G("2,1,3"))).has_value());
  const auto c = G("inf,inf,3");
  const auto r = classify(elem(c, {3, 2, 1}, {-2, 0, 2}));
  REQUIRE(r.has_value());
  REQUIRE(r->is_transposition());
  CHECK(r->as_transposition() == TranspositionLike{0, 2, 2});
  CHECK_FALSE(classify(elem(G("2,1,2"), {1, 2}, {1, 1})).has_value());
  CHECK_FALSE(classify(WreathElement::diagonal(G("inf,1,3"), 1, 0)).has_value());
  const auto w = classify(WreathElement::diagonal(G("inf,1,3"), 1, -4));
  REQUIRE(w.has_value());
  CHECK(w->as_diagonal() == Diagonal{1, -4});
  // Factories keep i < j: swapping the indices negates the twist.
  CHECK(Reflection::transposition(c, 2, 0, 5).as_transposition() == TranspositionLike{0, 2, -5});
  CHECK_THROWS_AS(Reflection::diagonal(G("3,3,3"), 0, 1), std::invalid_argument);
}

TEST_CASE("class_label examples") {
  const auto g = G("3,1,3");
  CHECK(class_label(trans(g, 1, 2, 1)) == label("T"));
  CHECK(class_label(diag(g, 2, 2)) == label("D2"));
  const auto h = G("4,4,2");
  CHECK(class_label(trans(h, 1, 2, 1)) == label("T_odd"));
  CHECK(class_label(trans(h, 1, 2, 0)) == label("T_even"));
  CHECK(class_label(diag(G("inf,1,2"), 1, -2)).to_string() == "W-2");
  CHECK(class_label(trans(G("inf,inf,2"), 1, 2, 3)) == label("T_odd"));
  CHECK(class_label(trans(G("inf,inf,3"), 1, 2, 3)) == label("T"));
  for (const char* text : {"T", "T_even", "T_odd", "D1", "D5", "W-3", "W7"}) CHECK(label(text).to_string() == text);
  CHECK_THROWS_AS(label("X"), std::invalid_argument);
  CHECK_THROWS_AS(class_label(trans(g, 1, 2, 0), G("2,1,3")), std::invalid_argument);
}

TEST_CASE("conjugacy_class_brute examples") {
  const auto g = G("2,1,2");
  CHECK(conjugacy_class_brute(diag(g, 1, 1), g) ==
        std::set<WreathElement>{elem(g, {1, 2}, {1, 0}), elem(g, {1, 2}, {0, 1})});
  const auto h = G("2,2,3");
  CHECK(conjugacy_class_brute(trans(h, 1, 2, 0), h).size() == 6);
  const auto s = G("1,1,2");
  CHECK(conjugacy_class_brute(trans(s, 1, 2, 0), s) == std::set<WreathElement>{elem(s, {2, 1}, {0, 0})});
}

TEST_CASE("class labels agree with brute-force conjugacy") {
  auto groups = small_groups();
  for (int d : {3, 4, 5, 6}) groups.push_back(GroupParams::finite(d, Family::Full, 2));
  for (const auto& p : groups) {
    CAPTURE(p.to_string());
    const auto refl = enumerate_reflections(p);
    const auto classes = oracle::reflection_classes(p);
    for (const auto& r : refl) {
      const auto cls = conjugacy_class_brute(r, p);
      for (const auto& s : refl) {
        const bool same_label = class_label(r) == class_label(s);
        REQUIRE(same_label == (cls.count(s.element()) == 1));
        REQUIRE(same_label == (classes.at(r.element()) == classes.at(s.element())));
      }
    }
  }
}

TEST_CASE("conjugation preserves class labels") {
  for (const auto& p : small_groups()) {
    if (p.order() > 2'000) continue;
    CAPTURE(p.to_string());
    const auto refl = enumerate_reflections(p);
    for (const auto& g : oracle::all_elements(p)) {
      for (const auto& r : refl) {
        const auto c = classify(conjugate(r.element(), g));
        REQUIRE(c.has_value());
        REQUIRE(class_label(*c) == class_label(r));
      }
    }
  }
}

TEST_CASE("coxeter_element examples") {
  const auto g = G("2,1,2");
  CHECK(coxeter_element(g) == elem(g, {2, 1}, {0, 1}));
  const auto h = G("3,3,3");
  CHECK(coxeter_element(h) == elem(h, {2, 1, 3}, {0, 1, 2}));
  const auto c = G("inf,inf,3");
  CHECK(coxeter_element(c) == elem(c, {2, 1, 3}, {0, 1, -1}));
  for (const auto& p : small_groups()) CHECK(coxeter_element(p) == oracle::coxeter(p));
}

TEST_CASE("coxeter_number examples and order of c") {
  const auto a = coxeter_number(G("2,1,2"));
  CHECK(a.reflection_count == 4);
  CHECK(a.hyperplane_count == 4);
  CHECK(a.h == 4);
  const auto b = coxeter_number(G("2,2,3"));
  CHECK(b.reflection_count == 6);
  CHECK(b.hyperplane_count == 6);
  CHECK(b.h == 4);
  for (int n = 2; n <= 7; ++n) {
    const auto s = coxeter_number(GroupParams::finite(1, Family::One, n));
    CHECK(s.reflection_count == static_cast<std::uint64_t>(n * (n - 1) / 2));
    CHECK(s.hyperplane_count == s.reflection_count);
    CHECK(s.h == static_cast<std::uint64_t>(n));
  }
  for (int d = 1; d <= 8; ++d) {
    for (int n = 2; n <= 6; ++n) {
      for (auto family : {Family::One, Family::Full}) {
        const auto p = GroupParams::finite(d, family, n);
        if (p.order() > 100'000) continue;
        CAPTURE(p.to_string());
        const auto data = coxeter_number(p);
        // Closed forms: h = dn for G(d,1,n) (d >= 2), h = d(n-1) for G(d,d,n).
        if (d >= 2) CHECK(data.h == static_cast<std::uint64_t>(family == Family::One ? d * n : d * (n - 1)));
        CHECK(element_order(coxeter_element(p)) == data.h);
        CHECK(data.reflection_count == oracle::reflections(p).size());
      }
    }
  }
}

TEST_CASE("affine presentation of G(inf,inf,n)") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    const auto c = GroupParams::cover(Family::Full, n);
    std::vector<WreathElement> s;
    s.push_back(WreathElement::transposition(c, 0, n - 1, 1));
    for (int i = 0; i + 1 < n; ++i) s.push_back(WreathElement::transposition(c, i, i + 1, 0));
    for (const auto& x : s) CHECK((x * x).is_identity());
    auto product = WreathElement::identity(c);
    for (const auto& x : s) product = product * x;
    CHECK(product == coxeter_element(c));
    if (n == 2) {
      // Infinite dihedral group: no braid relation, s0 s1 of infinite order.
      CHECK_FALSE(element_order(s[0] * s[1]).has_value());
      continue;
    }
    // Generators sit on a cycle 0 - 1 - ... - (n-1) - 0.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
        const auto& a = s[static_cast<std::size_t>(i)];
        const auto& b = s[static_cast<std::size_t>(j)];
        if (adjacent) {
          CHECK(a * b * a == b * a * b);
          CHECK(element_order(a * b) == 3);
        } else {
          CHECK(a * b == b * a);
        }
      }
    }
  }
}
