#include <doctest.h>

#include <random>
#include <set>

#include "charp/errors.hpp"
#include "charp/weyl.hpp"

using namespace charp;

TEST_CASE("simple reflections") {
  RootDatum a1(CartanType('A', 1));
  CHECK(simple_reflection(a1, 0, vec_of({3})) == vec_of({-3}));

  RootDatum a2(CartanType('A', 2));
  CHECK(simple_reflection(a2, 0, vec_of({1, 0})) == vec_of({-1, 1}));

  // s_i(rho) = rho - alpha_i, and reflections are involutions.
  for (const char* name : {"A2", "B2", "G2"}) {
    RootDatum rd(CartanType::parse(name));
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> dist(-5, 5);
    for (int i = 0; i < rd.rank(); ++i) {
      CHECK(simple_reflection(rd, i, rd.rho()) == rd.rho() - rd.simple_root(i));
      for (int t = 0; t < 20; ++t) {
        Vec x = vec_of({dist(rng), dist(rng)});
        CHECK(simple_reflection(rd, i, simple_reflection(rd, i, x)) == x);
      }
    }
  }
  CHECK_THROWS_AS(simple_reflection(a2, 2, vec_of({0, 0})), Error);
}

TEST_CASE("Weyl enumeration sizes and signs") {
  RootDatum a1(CartanType('A', 1));
  WeylGroup w1(a1);
  CHECK(w1.size() == 2);
  std::multiset<int> signs;
  for (const auto& el : w1.elements()) signs.insert(el.sign());
  CHECK(signs == std::multiset<int>{-1, 1});

  RootDatum a2(CartanType('A', 2));
  WeylGroup w2(a2);
  CHECK(w2.size() == 6);
  Int sign_sum = 0;
  for (const auto& el : w2.elements()) sign_sum += el.sign();
  CHECK(sign_sum == 0);

  CHECK(WeylGroup(RootDatum(CartanType('B', 2))).size() == 8);
  CHECK(WeylGroup(RootDatum(CartanType('G', 2))).size() == 12);
  CHECK(WeylGroup(RootDatum(CartanType('A', 3))).size() == 24);

  CHECK_THROWS_AS(WeylGroup(RootDatum(CartanType('E', 7))), BoundExceeded);
  CHECK_NOTHROW(WeylGroup(RootDatum(CartanType('B', 4)), 400));
  CHECK_THROWS_AS(WeylGroup(RootDatum(CartanType('B', 4)), 383), BoundExceeded);
}

TEST_CASE("enumerated words are reduced and lex-minimal") {
  RootDatum b2(CartanType('B', 2));
  WeylGroup w(b2);
  std::set<Vec, VecLexLess> seen;  // flattened matrices, uniqueness
  int length_8 = 0;
  for (const auto& el : w.elements()) {
    // Multiply the word out and compare.
    Mat acc = Mat::Identity(2, 2);
    for (int i : el.word) acc = acc * weyl_generator_matrix(b2, i);
    CHECK(acc == el.matrix);
    Vec flat(4);
    flat << el.matrix(0, 0), el.matrix(0, 1), el.matrix(1, 0), el.matrix(1, 1);
    CHECK(seen.insert(flat).second);
    if (el.length() == 4) ++length_8;
  }
  CHECK(length_8 == 1);  // unique longest element of B2 has length 4

  // Sign is a homomorphism on sampled pairs.
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
  auto find_sign = [&](const Mat& m) {
    for (const auto& el : w.elements()) {
      if (el.matrix == m) return el.sign();
    }
    REQUIRE(false);
    return 0;
  };
  for (int t = 0; t < 60; ++t) {
    const auto& u = w.elements()[pick(rng)];
    const auto& v = w.elements()[pick(rng)];
    CHECK(find_sign(u.matrix * v.matrix) == u.sign() * v.sign());
  }
}

TEST_CASE("to_dominant") {
  RootDatum a1(CartanType('A', 1));
  auto r1 = to_dominant(a1, vec_of({-3}));
  CHECK(r1.dominant == vec_of({3}));
  CHECK(r1.sign == -1);
  CHECK(r1.w.word == std::vector<int>{0});
  CHECK(r1.w.matrix * r1.dominant == vec_of({-3}));

  RootDatum a2(CartanType('A', 2));
  auto r2 = to_dominant(a2, vec_of({-1, 1}));
  CHECK(r2.dominant == vec_of({1, 0}));
  CHECK(r2.sign == -1);
  CHECK(r2.w.matrix * r2.dominant == vec_of({-1, 1}));

  auto r3 = to_dominant(a2, vec_of({2, 3}));
  CHECK(r3.dominant == vec_of({2, 3}));
  CHECK(r3.sign == 1);
  CHECK(r3.w.word.empty());
}

TEST_CASE("every orbit has exactly one dominant weight") {
  std::mt19937 rng(17);
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    RootDatum rd(CartanType::parse(name));
    WeylGroup w(rd);
    std::uniform_int_distribution<Int> dist(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
      Vec lambda(rd.rank());
      for (int i = 0; i < rd.rank(); ++i) lambda[i] = dist(rng);
      auto res = to_dominant(rd, lambda);
      CHECK(is_dominant(rd, res.dominant));
      CHECK(res.w.matrix * res.dominant == lambda);
      // The greedy word is reduced: its length matches the BFS length of
      // the element it spells.
      bool found = false;
      for (const auto& el : w.elements()) {
        if (el.matrix == res.w.matrix) {
          CHECK(el.length() == res.w.length());
          found = true;
          break;
        }
      }
      CHECK(found);
      int dominant_count = 0;
      for (const auto& img : w.orbit(lambda)) {
        if (is_dominant(rd, img)) ++dominant_count;
      }
      CHECK(dominant_count == 1);
    }
  }
}

TEST_CASE("coroot set sizes") {
  CHECK(coroot_set(RootDatum(CartanType('A', 1))).size() == 2);
  CHECK(coroot_set(RootDatum(CartanType('A', 2))).size() == 6);
  CHECK(coroot_set(RootDatum(CartanType('B', 2))).size() == 8);
  CHECK(coroot_set(RootDatum(CartanType('G', 2))).size() == 12);
  CHECK(coroot_set(RootDatum(CartanType('F', 4))).size() == 48);

  // Contains the negatives of the simple coroots and is closed under W.
  RootDatum g2(CartanType('G', 2));
  std::set<Vec, VecLexLess> coords;
  for (const auto& c : coroot_set(g2)) coords.insert(c.coords);
  for (const auto& s : g2.simple_coroots()) {
    CHECK(coords.count(s.coords) == 1);
    CHECK(coords.count((-s.coords).eval()) == 1);
  }
}

TEST_CASE("orbit sizes divide the group order") {
  RootDatum g2(CartanType('G', 2));
  WeylGroup w(g2);
  CHECK(w.orbit(vec_of({0, 0})).size() == 1);
  CHECK(w.orbit(vec_of({1, 1})).size() == 12);  // regular weight
  CHECK(12 % w.orbit(vec_of({1, 0})).size() == 0);
}
