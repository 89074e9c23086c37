#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "charp/affine.hpp"
#include "charp/errors.hpp"

using namespace charp;

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Independent length oracle: the number of reflection hyperplanes
// <beta, nu> = k p (beta positive coroot, k integral) separating the
// fundamental alcove from its image.  Computed in h-scaled coordinates so
// the interior base point -(p/h) rho stays integral.
Int separation_length(const AffineTable& table, const AffineMap& x) {
  const RootDatum& rd = table.datum();
  const Int p = table.p();
  const Int h = rd.coxeter_number();
  const Vec base = (-p * rd.rho()).eval();                       // h * nu0
  const Vec image = x.linear * base + h * x.translation;         // h * x(nu0)
  Int total = 0;
  for (const auto& beta : rd.positive_coroots()) {
    Int a = pairing(beta, base);
    Int b = pairing(beta, image);
    Int lo = std::min(a, b), hi = std::max(a, b);
    total += floor_div(hi, p * h) - floor_div(lo, p * h);
  }
  return total;
}

// All products of subsequences of a reduced word of w are exactly the
// elements below w in Bruhat order.
std::set<int> subword_elements(AffineTable& table, const AffineElement& w) {
  std::set<int> out;
  const std::size_t n = w.word.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    AffineMap m = AffineMap::identity(table.datum().rank());
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        m = compose(m, affine_generator_map(table.datum(), table.p(), w.word[i]));
      }
    }
    out.insert(*table.find(m));
  }
  return out;
}

}  // namespace

TEST_CASE("affine generators implement the defining formulas") {
  RootDatum a1(CartanType('A', 1));
  auto gens = affine_generators(a1, 3);
  REQUIRE(gens.size() == 2);
  CHECK(act(a1, gens[1], vec_of({3})) == vec_of({-5}));
  CHECK(act(a1, gens[0], vec_of({-1})) == vec_of({-7}));
  // Fixed points: s'_i fixes the shifted origin, s'_0 the level -p wall.
  CHECK(act(a1, gens[1], vec_of({-1})) == vec_of({-1}));
  CHECK(act(a1, gens[0], vec_of({-4})) == vec_of({-4}));

  std::mt19937 rng(5);
  for (const char* name : {"A2", "B2", "G2"}) {
    RootDatum rd(CartanType::parse(name));
    for (Int p : {2, 5}) {
      auto g = affine_generators(rd, p);
      std::uniform_int_distribution<Int> dist(-8, 8);
      for (const auto& gen : g) {
        for (int t = 0; t < 20; ++t) {
          Vec lambda = vec_of({dist(rng), dist(rng)});
          CHECK(act(rd, gen, act(rd, gen, lambda)) == lambda);  // involution
        }
      }
      // The direct formulas of the generators.
      for (int t = 0; t < 20; ++t) {
        Vec lambda = vec_of({dist(rng), dist(rng)});
        for (int i = 0; i < rd.rank(); ++i) {
          Vec expected = lambda - pairing(rd.simple_coroots()[i], lambda + rd.rho()) * rd.simple_root(i);
          CHECK(act(rd, g[static_cast<std::size_t>(i + 1)], lambda) == expected);
        }
        Vec expected0 = lambda - (pairing(rd.highest_coroot(), lambda + rd.rho()) + p) *
                                     rd.highest_coroot().paired_root;
        CHECK(act(rd, g[0], lambda) == expected0);
      }
    }
  }
}

TEST_CASE("affine action composes") {
  RootDatum a1(CartanType('A', 1));
  auto gens = affine_generators(a1, 3);
  AffineMap x = compose(gens[1].map, gens[0].map);
  CHECK(act(a1, x, vec_of({-3})) == vec_of({3}));
  CHECK(act(a1, AffineMap::identity(1), vec_of({7})) == vec_of({7}));

  std::mt19937 rng(23);
  std::uniform_int_distribution<Int> dist(-30, 30);
  AffineMap inv = x.inverse();
  for (int t = 0; t < 100; ++t) {
    Vec lambda = vec_of({dist(rng)});
    CHECK(act(a1, inv, act(a1, x, lambda)) == lambda);
    CHECK(act(a1, compose(x, inv), lambda) == lambda);
  }
}

TEST_CASE("table growth matches Coxeter growth") {
  RootDatum a1(CartanType('A', 1));
  AffineTable t1(a1, 3, 10);
  t1.ensure_length(3);
  CHECK(t1.count_of_length(0) == 1);
  CHECK(t1.count_of_length(1) == 2);
  CHECK(t1.count_of_length(2) == 2);
  CHECK(t1.count_of_length(3) == 2);

  RootDatum a2(CartanType('A', 2));
  AffineTable t2(a2, 5, 10);
  t2.ensure_length(2);
  CHECK(t2.count_of_length(0) == 1);
  CHECK(t2.count_of_length(1) == 3);
  CHECK(t2.count_of_length(2) == 6);

  AffineTable fresh(a1, 3, 3);
  CHECK(fresh.built_length() == 0);
  CHECK(fresh.count_of_length(0) == 1);
  CHECK(fresh.element(0).word.empty());

  AffineTable bounded(a1, 3, 3);
  CHECK_NOTHROW(bounded.ensure_length(3));
  CHECK_THROWS_AS(bounded.ensure_length(4), BoundExceeded);
}

TEST_CASE("generator products have the affine Coxeter orders") {
  struct Expect {
    const char* type;
    Int p;
    int i, j;
    Int order;  // 0 means infinite (no identity within the cap)
  };
  // Orders of s'_i s'_j: the affinization attaches the new node through the
  // highest coroot / highest short root pairings.
  const Expect table[] = {
      {"A1", 3, 0, 1, 0},  {"A2", 2, 0, 1, 3},  {"A2", 2, 0, 2, 3},  {"A2", 2, 1, 2, 3},
      {"B2", 3, 0, 1, 4},  {"B2", 3, 0, 2, 2},  {"B2", 3, 1, 2, 4},  {"G2", 2, 0, 1, 3},
      {"G2", 2, 0, 2, 2},  {"G2", 2, 1, 2, 6},
  };
  for (const auto& e : table) {
    CAPTURE(e.type);
    CAPTURE(e.i);
    CAPTURE(e.j);
    RootDatum rd(CartanType::parse(e.type));
    AffineMap prod = compose(affine_generator_map(rd, e.p, e.i), affine_generator_map(rd, e.p, e.j));
    AffineMap acc = AffineMap::identity(rd.rank());
    Int order = 0;
    for (Int n = 1; n <= 24; ++n) {
      acc = compose(acc, prod);
      if (acc == AffineMap::identity(rd.rank())) {
        order = n;
        break;
      }
    }
    CHECK(order == e.order);
  }
}

TEST_CASE("length is the separating-hyperplane count") {
  for (const char* name : {"A1", "A2"}) {
    for (Int p : {2, 3}) {
      RootDatum rd(CartanType::parse(name));
      AffineTable table(rd, p, 10);
      table.ensure_length(8);
      auto [first, last] = table.length_range(8);
      for (int id = 0; id < last; ++id) {
        const auto& el = table.element(id);
        CHECK(separation_length(table, el.map) == el.length);
      }
      (void)first;
    }
  }
}

TEST_CASE("left multiplication changes length by one") {
  RootDatum a2(CartanType('A', 2));
  AffineTable table(a2, 5, 10);
  table.ensure_length(5);
  auto [first, last] = table.length_range(4);
  (void)first;
  for (int id = 0; id < last; ++id) {
    for (int g = 0; g <= 2; ++g) {
      int other = table.left_mult(g, id);
      CHECK(std::abs(table.element(other).length - table.element(id).length) == 1);
    }
  }
}

TEST_CASE("table words are reduced and lex-minimal") {
  RootDatum a2(CartanType('A', 2));
  AffineTable table(a2, 3, 8);
  table.ensure_length(5);
  auto [f5, l5] = table.length_range(5);
  (void)f5;
  for (int id = 0; id < l5; ++id) {
    const auto& el = table.element(id);
    CHECK(static_cast<Int>(el.word.size()) == el.length);
    AffineMap m = AffineMap::identity(2);
    for (int g : el.word) m = compose(m, affine_generator_map(a2, 3, g));
    CHECK(m == el.map);
    // Lex-minimality: first letter is the smallest left descent.
    if (el.length > 0) CHECK(el.word.front() == table.smallest_left_descent(id));
  }
}

TEST_CASE("compose and inverse recover canonical data") {
  RootDatum a1(CartanType('A', 1));
  AffineTable table(a1, 3, 12);
  auto gens = affine_generators(a1, 3);

  AffineElement id01 = table.compose_elements(gens[0], gens[0]);
  CHECK(id01.length == 0);
  CHECK(id01.word.empty());

  AffineElement s10 = table.compose_elements(gens[1], gens[0]);
  CHECK(s10.length == 2);
  CHECK(s10.word == std::vector<int>{1, 0});

  AffineElement inv = table.inverse_element(s10);
  CHECK(inv.length == 2);
  CHECK(inv.word == std::vector<int>{0, 1});

  AffineElement via_word = table.element_of_word({1, 0, 0, 1});
  CHECK(via_word.length == 0);  // involutions cancel

  AffineTable tight(a1, 3, 2);
  auto g = affine_generators(a1, 3);
  AffineElement x = tight.compose_elements(g[1], g[0]);
  CHECK_THROWS_AS(tight.compose_elements(x, g[1]), BoundExceeded);
}

TEST_CASE("descent sets") {
  RootDatum a1(CartanType('A', 1));
  AffineTable table(a1, 3, 8);
  auto gens = affine_generators(a1, 3);
  AffineElement s10 = table.compose_elements(gens[1], gens[0]);
  int id = *table.find(s10.map);
  CHECK(table.left_descent(1, id));
  CHECK(!table.left_descent(0, id));
  CHECK(table.right_descent(0, id));
  CHECK(!table.right_descent(1, id));
  CHECK(table.smallest_left_descent(id) == 1);
  CHECK(!table.left_descent(0, table.identity_id()));
  CHECK(!table.right_descent(1, table.identity_id()));
}

TEST_CASE("domain membership") {
  RootDatum a1(CartanType('A', 1));
  for (Int lam : {-1, -2, -3, -4}) CHECK(in_domain(a1, 3, vec_of({lam})));
  CHECK(!in_domain(a1, 3, vec_of({0})));
  CHECK(!in_domain(a1, 3, vec_of({-5})));
  CHECK(in_domain(a1, 3, (-a1.rho()).eval()));

  RootDatum a2(CartanType('A', 2));
  CHECK(in_domain(a2, 5, vec_of({-1, -1})));
  CHECK(in_domain(a2, 5, (-a2.rho()).eval()));
  CHECK(!in_domain(a2, 5, vec_of({0, -1})));
}

TEST_CASE("minimal length to the domain") {
  RootDatum a1(CartanType('A', 1));
  AffineTable table(a1, 3, 16);

  AffineElement w3 = table.min_length_to_domain(vec_of({3}));
  CHECK(w3.length == 2);
  CHECK(w3.word == std::vector<int>{1, 0});
  CHECK(act(a1, w3.map.inverse(), vec_of({3})) == vec_of({-3}));

  AffineElement w1 = table.min_length_to_domain(vec_of({1}));
  CHECK(w1.length == 1);
  CHECK(w1.word == std::vector<int>{1});

  AffineElement wd = table.min_length_to_domain(vec_of({-2}));
  CHECK(wd.length == 0);
}

TEST_CASE("minimality of the greedy domain word, exhaustively") {
  std::mt19937 rng(31);
  for (const char* name : {"A1", "A2"}) {
    for (Int p : {2, 3}) {
      RootDatum rd(CartanType::parse(name));
      AffineTable table(rd, p, 9);
      table.ensure_length(8);
      std::uniform_int_distribution<Int> dist(-2 * p, 2 * p);
      int used = 0;
      for (int trial = 0; trial < 900 && used < 130; ++trial) {
        Vec lambda(rd.rank());
        for (int i = 0; i < rd.rank(); ++i) lambda[i] = dist(rng);
        std::vector<int> word;
        Vec delta = domain_point(rd, p, lambda, &word);
        CHECK(in_domain(rd, p, delta));
        if (static_cast<Int>(word.size()) > 8) continue;
        ++used;
        AffineElement w = table.min_length_to_domain(lambda);
        CHECK(w.length == static_cast<Int>(word.size()));
        // No strictly shorter element maps lambda into the domain, and the
        // minimal one is unique.
        int same_length = 0;
        auto [f, l] = table.length_range(std::min<Int>(8, w.length));
        (void)f;
        for (int id = 0; id < l; ++id) {
          const auto& el = table.element(id);
          if (act(rd, el.map.inverse(), lambda) == delta) {
            CHECK(el.length >= w.length);
            if (el.length == w.length) ++same_length;
          }
        }
        CHECK(same_length == 1);
      }
      CHECK(used > 30);
    }
  }
}

TEST_CASE("fibers over domain points") {
  RootDatum a1(CartanType('A', 1));
  AffineTable table(a1, 3, 12);

  auto self = table.fiber_elements(vec_of({-3}), vec_of({-3}), 2);
  bool has_identity = false;
  for (const auto& y : self) has_identity = has_identity || y.length == 0;
  CHECK(has_identity);

  auto f1 = table.fiber_elements(vec_of({1}), vec_of({-3}), 2);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].word == std::vector<int>{1});

  auto f3 = table.fiber_elements(vec_of({3}), vec_of({-3}), 2);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].word == std::vector<int>{1, 0});

  // Wall point lambda = -4 (shifted level -p): the stabilizer doubles the
  // fiber over mu = 2.
  auto wall = table.fiber_elements(vec_of({2}), vec_of({-4}), 4);
  REQUIRE(wall.size() == 2);
  CHECK(wall[0].length == 1);
  CHECK(wall[1].length == 2);

  CHECK_THROWS_AS(table.fiber_elements(vec_of({1}), vec_of({5}), 2), Error);
}

TEST_CASE("Bruhat order") {
  RootDatum a1(CartanType('A', 1));
  AffineTable t1(a1, 3, 10);
  t1.ensure_length(6);
  auto gens = affine_generators(a1, 3);
  int e = t1.identity_id();
  int s1 = t1.generator_id(1);
  int s0 = t1.generator_id(0);
  int s10 = *t1.find(compose(gens[1].map, gens[0].map));
  CHECK(t1.bruhat_leq(e, s10));
  CHECK(t1.bruhat_leq(s1, s10));
  CHECK(t1.bruhat_leq(s0, s10));
  CHECK(t1.bruhat_leq(s10, s10));
  CHECK(!t1.bruhat_leq(s10, s1));
  CHECK(!t1.bruhat_leq(s1, s0));  // distinct same-length elements are incomparable

  // Exhaustive agreement with the subword characterization.
  for (const char* name : {"A1", "A2"}) {
    RootDatum rd(CartanType::parse(name));
    AffineTable table(rd, 2, 8);
    table.ensure_length(6);
    auto [f6, l6] = table.length_range(6);
    (void)f6;
    for (int w = 0; w < l6; ++w) {
      std::set<int> below = subword_elements(table, table.element(w));
      for (int y = 0; y < l6; ++y) {
        CAPTURE(w);
        CAPTURE(y);
        CHECK(table.bruhat_leq(y, w) == (below.count(y) == 1));
      }
    }
  }
}

TEST_CASE("linked dominant weights") {
  RootDatum a1(CartanType('A', 1));
  auto l3 = linked_dominant_weights(a1, 3, vec_of({3}));
  REQUIRE(l3.size() == 2);
  CHECK(l3[0] == vec_of({1}));
  CHECK(l3[1] == vec_of({3}));

  auto l2 = linked_dominant_weights(a1, 2, vec_of({2}));
  REQUIRE(l2.size() == 2);
  CHECK(l2[0] == vec_of({0}));
  CHECK(l2[1] == vec_of({2}));

  RootDatum a2(CartanType('A', 2));
  auto single = linked_dominant_weights(a2, 5, vec_of({1, 1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == vec_of({1, 1}));

  auto pair = linked_dominant_weights(a2, 3, vec_of({1, 1}));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == vec_of({0, 0}));
  CHECK(pair[1] == vec_of({1, 1}));

  CHECK_THROWS_AS(linked_dominant_weights(a1, 3, vec_of({-1})), NotDominant);

  // Always contains lambda; every member is dominant, linked and below.
  std::mt19937 rng(41);
  std::uniform_int_distribution<Int> dist(0, 9);
  for (int t = 0; t < 25; ++t) {
    Vec lambda = vec_of({dist(rng), dist(rng)});
    auto linked = linked_dominant_weights(a2, 2, lambda);
    CHECK(std::count(linked.begin(), linked.end(), lambda) == 1);
    for (const auto& mu : linked) {
      CHECK(is_dominant(a2, mu));
      CHECK(dominance_leq(a2, mu, lambda));
      CHECK(domain_point(a2, 2, mu) == domain_point(a2, 2, lambda));
    }
  }
}
