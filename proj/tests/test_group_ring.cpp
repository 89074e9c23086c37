#include <doctest.h>

#include <random>

#include "charp/errors.hpp"
#include "charp/group_ring.hpp"

using namespace charp;

namespace {

GroupRingElement random_element(std::mt19937& rng, int rank, int max_terms) {
  std::uniform_int_distribution<Int> coord(-6, 6);
  std::uniform_int_distribution<Int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  GroupRingElement out;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Vec mu(rank);
    for (int i = 0; i < rank; ++i) mu[i] = coord(rng);
    out.add_term(mu, Integer(coeff(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("basis law e^mu e^nu = e^{mu+nu}") {
  GroupRingElement a = GroupRingElement::monomial(vec_of({2, -1}));
  GroupRingElement b = GroupRingElement::monomial(vec_of({-5, 3}), Integer(4));
  GroupRingElement ab = a * b;
  CHECK(ab.support_size() == 1);
  CHECK(ab.coefficient(vec_of({-3, 2})) == Integer(4));
}

TEST_CASE("no explicit zero coefficients survive") {
  GroupRingElement x;
  x.add_term(vec_of({1}), Integer(3));
  x.add_term(vec_of({1}), Integer(-3));
  CHECK(x.is_zero());
  CHECK(x == GroupRingElement());
  x.add_term(vec_of({0}), Integer(0));
  CHECK(x.support_size() == 0);

  GroupRingElement u = GroupRingElement::unit(1);
  CHECK((u - u).is_zero());
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    GroupRingElement a = random_element(rng, 2, 6);
    GroupRingElement b = random_element(rng, 2, 6);
    GroupRingElement c = random_element(rng, 2, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * GroupRingElement::unit(2) == a);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Integer(-3)) == -(a + a + a));
  }
}

TEST_CASE("dimension is the coefficient sum") {
  CHECK(GroupRingElement::unit(3).dimension() == Integer(1));
  GroupRingElement x;
  x.add_term(vec_of({4}), Integer(2));
  x.add_term(vec_of({-4}), Integer(-7));
  CHECK(x.dimension() == Integer(-5));
  CHECK(GroupRingElement().dimension().is_zero());
}

TEST_CASE("twist") {
  GroupRingElement x;
  x.add_term(vec_of({1}), Integer(1));
  x.add_term(vec_of({-1}), Integer(1));
  GroupRingElement t = twist(x, 3, 1);
  GroupRingElement expected;
  expected.add_term(vec_of({3}), Integer(1));
  expected.add_term(vec_of({-3}), Integer(1));
  CHECK(t == expected);

  CHECK(twist(GroupRingElement::unit(1), 5, 4) == GroupRingElement::unit(1));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    GroupRingElement a = random_element(rng, 2, 5);
    GroupRingElement b = random_element(rng, 2, 5);
    // twist(, 0) is the identity map.
    CHECK(twist(a, 3, 0) == a);
    // Composition law and multiplicativity.
    CHECK(twist(a, 2, 3) == twist(twist(a, 2, 1), 2, 2));
    CHECK(twist(a * b, 3, 2) == twist(a, 3, 2) * twist(b, 3, 2));
    CHECK(twist(a + b, 3, 2) == twist(a, 3, 2) + twist(b, 3, 2));
    // Coefficients unchanged, support size preserved.
    CHECK(twist(a, 5, 1).support_size() == a.support_size());
    CHECK(twist(a, 5, 1).dimension() == a.dimension());
  }

  CHECK_THROWS_AS(twist(x, 1, 1), InvalidCharacteristic);
  CHECK_THROWS_AS(twist(x, 3, -1), Error);
}

TEST_CASE("rendering and first difference") {
  GroupRingElement x;
  x.add_term(vec_of({3}), Integer(1));
  x.add_term(vec_of({-3}), Integer(2));
  CHECK(x.to_string() == "2*e[-3] + e[3]");
  CHECK(GroupRingElement().to_string() == "0");

  GroupRingElement y;
  y.add_term(vec_of({3}), Integer(1));
  CHECK(GroupRingElement::first_difference(x, y) == "coefficient at e[-3]: 2 vs 0");
  CHECK(GroupRingElement::first_difference(x, x).empty());
}
