#include <doctest.h>

#include <random>
#include <set>

#include "charp/cartan.hpp"
#include "charp/errors.hpp"

using namespace charp;

TEST_CASE("Cartan type validation and parsing") {
  CHECK_NOTHROW(CartanType('A', 1));
  CHECK_NOTHROW(CartanType('D', 3));
  CHECK_NOTHROW(CartanType('E', 8));
  CHECK_THROWS_AS(CartanType('B', 1), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('C', 1), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('D', 2), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('E', 5), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('F', 3), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('G', 3), InvalidCartanType);
  CHECK_THROWS_AS(CartanType('H', 3), InvalidCartanType);

  CHECK(CartanType::parse("a2") == CartanType('A', 2));
  CHECK(CartanType::parse("G2") == CartanType('G', 2));
  CHECK(CartanType::parse("e7").to_string() == "E7");
  CHECK(CartanType::parse("B2").affine_key() == "B~2");
  CHECK_THROWS_AS(CartanType::parse(""), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("A"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("Ax"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("2A"), InvalidCartanType);
}

TEST_CASE("Cartan matrices match the classical tables") {
  RootDatum a1(CartanType('A', 1));
  CHECK(a1.cartan() == Mat::Constant(1, 1, 2));
  CHECK(a1.rho() == vec_of({1}));
  CHECK(a1.coxeter_number() == 2);

  RootDatum a2(CartanType('A', 2));
  Mat a2c(2, 2);
  a2c << 2, -1, -1, 2;
  CHECK(a2.cartan() == a2c);
  CHECK(a2.coxeter_number() == 3);

  // Convention C(i,j) = <coroot_i, root_j>: the G2 matrix comes out as the
  // transpose of the table printed with the other index order.
  RootDatum g2(CartanType('G', 2));
  Mat g2c(2, 2);
  g2c << 2, -3, -1, 2;
  CHECK(g2.cartan() == g2c);
  CHECK(g2.coxeter_number() == 6);

  RootDatum b2(CartanType('B', 2));
  Mat b2c(2, 2);
  b2c << 2, -1, -2, 2;
  CHECK(b2.cartan() == b2c);

  RootDatum b3(CartanType('B', 3));
  CHECK(b3.cartan()(1, 2) == -1);
  CHECK(b3.cartan()(2, 1) == -2);
  RootDatum c3(CartanType('C', 3));
  CHECK(c3.cartan()(1, 2) == -2);
  CHECK(c3.cartan()(2, 1) == -1);
  RootDatum f4(CartanType('F', 4));
  CHECK(f4.cartan()(1, 2) == -1);
  CHECK(f4.cartan()(2, 1) == -2);
}

TEST_CASE("root datum invariants across all desk types") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4",
                           "F4", "G2", "E6", "E7", "E8"}) {
    CAPTURE(name);
    RootDatum rd(CartanType::parse(name));
    const int n = rd.rank();

    // Diagonal 2, off-diagonal <= 0.
    for (int i = 0; i < n; ++i) {
      CHECK(rd.cartan()(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i != j) CHECK(rd.cartan()(i, j) <= 0);
      }
    }

    // <coroot_i, rho> = 1.
    for (int i = 0; i < n; ++i) CHECK(pairing(rd.simple_coroots()[i], rd.rho()) == 1);

    // Coroot count and Coxeter number.
    CHECK(static_cast<Int>(rd.coroots().size()) == Int(n) * rd.coxeter_number());
    CHECK(rd.coxeter_number() == 1 + rd.highest_coroot().coords.sum());
    CHECK(2 * rd.positive_coroots().size() == rd.coroots().size());

    // Highest coroot: in the set, and adding any simple coroot leaves it.
    std::set<Vec, VecLexLess> coords;
    for (const auto& c : rd.coroots()) coords.insert(c.coords);
    CHECK(coords.count(rd.highest_coroot().coords) == 1);
    for (int i = 0; i < n; ++i) {
      Vec up = rd.highest_coroot().coords;
      up[i] += 1;
      CHECK(coords.count(up) == 0);
    }

    // Pairing of each coroot with its own root is 2.
    for (const auto& c : rd.coroots()) CHECK(pairing(c, c.paired_root) == 2);

    // adj(C) * C = det(C) * I and the height functional is positive on the
    // simple roots.
    CHECK(rd.cartan_adjugate() * rd.cartan() == rd.cartan_det() * Mat::Identity(n, n));
    CHECK(rd.cartan_det() > 0);
    for (int j = 0; j < n; ++j) CHECK(rd.height(rd.simple_root(j)) == rd.cartan_det());

    // The invariant form is symmetric and positive on the simple roots.
    for (int j = 0; j < n; ++j) CHECK(rd.form(rd.simple_root(j), rd.simple_root(j)) > 0);
  }
}

TEST_CASE("classical Coxeter numbers") {
  CHECK(RootDatum(CartanType::parse("A3")).coxeter_number() == 4);
  CHECK(RootDatum(CartanType::parse("B3")).coxeter_number() == 6);
  CHECK(RootDatum(CartanType::parse("C4")).coxeter_number() == 8);
  CHECK(RootDatum(CartanType::parse("D4")).coxeter_number() == 6);
  CHECK(RootDatum(CartanType::parse("F4")).coxeter_number() == 12);
  CHECK(RootDatum(CartanType::parse("E6")).coxeter_number() == 12);
  CHECK(RootDatum(CartanType::parse("E7")).coxeter_number() == 18);
  CHECK(RootDatum(CartanType::parse("E8")).coxeter_number() == 30);
}

TEST_CASE("pairing examples") {
  RootDatum a2(CartanType('A', 2));
  CHECK(pairing(a2.simple_coroots()[0], a2.rho()) == 1);
  CHECK(pairing(a2.highest_coroot(), a2.rho()) == 2);  // highest coroot is the sum of the two simples
  CHECK(a2.highest_coroot().coords == vec_of({1, 1}));

  RootDatum a1(CartanType('A', 1));
  CHECK(pairing(a1.simple_coroots()[0], a1.simple_root(0)) == 2);
  CHECK(a1.highest_coroot().coords == vec_of({1}));

  CHECK_THROWS_AS(pairing(a2.simple_coroots()[0], vec_of({1})), RankMismatch);
}

TEST_CASE("B2 and G2 highest coroots from enumeration") {
  RootDatum b2(CartanType('B', 2));
  CHECK(b2.highest_coroot().coords == vec_of({2, 1}));
  // Its paired root is the highest short root.
  CHECK(b2.highest_coroot().paired_root == vec_of({1, 0}));

  RootDatum g2(CartanType('G', 2));
  CHECK(g2.highest_coroot().coords == vec_of({2, 3}));
  CHECK(g2.highest_coroot().paired_root == vec_of({1, 0}));
}

TEST_CASE("dominance flags") {
  RootDatum a1(CartanType('A', 1));
  CHECK(dominance_flags(a1, vec_of({3}), 3) == std::pair{true, false});
  CHECK(dominance_flags(a1, vec_of({2}), 3) == std::pair{true, true});
  RootDatum a2(CartanType('A', 2));
  CHECK(dominance_flags(a2, vec_of({-1, 4}), 5) == std::pair{false, false});
  CHECK(dominance_flags(a2, vec_of({0, 0}), 2) == std::pair{true, true});
  CHECK_THROWS_AS(dominance_flags(a1, vec_of({1}), 1), InvalidCharacteristic);
}

TEST_CASE("dominance partial order") {
  RootDatum a1(CartanType('A', 1));
  CHECK(dominance_leq(a1, vec_of({1}), vec_of({3})));
  CHECK(!dominance_leq(a1, vec_of({0}), vec_of({3})));  // parity obstruction
  RootDatum a2(CartanType('A', 2));
  CHECK(dominance_leq(a2, vec_of({0, 0}), vec_of({1, 1})));  // difference = alpha_1 + alpha_2
  CHECK(!dominance_leq(a2, vec_of({1, 0}), vec_of({0, 1})));
  CHECK(!dominance_leq(a2, vec_of({0, 1}), vec_of({1, 0})));

  // Partial-order laws on a random sample.
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> dist(-4, 4);
  std::vector<Vec> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(vec_of({dist(rng), dist(rng)}));
  for (const auto& x : sample) CHECK(dominance_leq(a2, x, x));
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      if (dominance_leq(a2, x, y) && dominance_leq(a2, y, x)) CHECK(x == y);
      for (const auto& z : sample) {
        if (dominance_leq(a2, x, y) && dominance_leq(a2, y, z)) CHECK(dominance_leq(a2, x, z));
      }
    }
  }
}

TEST_CASE("p-adic digits") {
  RootDatum a1(CartanType('A', 1));
  {
    auto d = p_adic_digits(a1, vec_of({7}), 3);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == vec_of({1}));
    CHECK(d[1] == vec_of({2}));
  }
  {
    auto d = p_adic_digits(a1, vec_of({3}), 3);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == vec_of({0}));
    CHECK(d[1] == vec_of({1}));
  }
  RootDatum a2(CartanType('A', 2));
  {
    auto d = p_adic_digits(a2, vec_of({5, 1}), 5);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == vec_of({0, 1}));
    CHECK(d[1] == vec_of({1, 0}));
  }
  CHECK(p_adic_digits(a2, vec_of({0, 0}), 5).empty());
  CHECK_THROWS_AS(p_adic_digits(a1, vec_of({-1}), 3), NotDominant);
  CHECK(p_adic_digit(a2, vec_of({5, 1}), 5, 0) == vec_of({0, 1}));
  CHECK(p_adic_digit(a2, vec_of({5, 1}), 5, 7) == vec_of({0, 0}));
}

TEST_CASE("digit reconstruction on random dominant weights") {
  std::mt19937 rng(20250809);
  for (const char* name : {"A1", "A2", "B3"}) {
    RootDatum rd(CartanType::parse(name));
    std::uniform_int_distribution<Int> dist(0, 400);
    for (Int p : {2, 3, 5, 7}) {
      for (int trial = 0; trial < 350; ++trial) {
        Vec lambda(rd.rank());
        for (int i = 0; i < rd.rank(); ++i) lambda[i] = dist(rng);
        auto digits = p_adic_digits(rd, lambda, p);
        if (!digits.empty()) CHECK((digits.back().array() != 0).any());  // trimmed
        Vec sum = Vec::Zero(rd.rank());
        Int scale = 1;
        for (const auto& d : digits) {
          CHECK(dominance_flags(rd, d, p).second);  // each digit restricted
          sum += scale * d;
          scale *= p;
        }
        CHECK(sum == lambda);
      }
    }
  }
}

TEST_CASE("characteristic validation") {
  CHECK_NOTHROW(validate_characteristic(2));
  CHECK_NOTHROW(validate_characteristic(7));
  CHECK_NOTHROW(validate_characteristic(101));
  CHECK_THROWS_AS(validate_characteristic(1), InvalidCharacteristic);
  CHECK_THROWS_AS(validate_characteristic(0), InvalidCharacteristic);
  CHECK_THROWS_AS(validate_characteristic(4), InvalidCharacteristic);
  CHECK_THROWS_AS(validate_characteristic(91), InvalidCharacteristic);  // 7 * 13
}

TEST_CASE("exact determinant and adjugate") {
  Mat m(3, 3);
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;  // Cartan A3, det 4
  CHECK(det_exact(m) == 4);
  CHECK(adjugate_exact(m) * m == 4 * Mat::Identity(3, 3));

  Mat singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(det_exact(singular) == 0);
}
