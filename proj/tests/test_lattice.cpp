#include <doctest.h>

#include <limits>

#include "skewbrace/lattice.hpp"

using namespace skb;

TEST_SUITE("lattice") {
  TEST_CASE("matrix powers") {
    for (long long p : {0LL, 1LL, 2LL, -3LL}) {
      auto m = lattice_lambda(p);
      CHECK(m.det() == 1);
      CHECK(m * m.inverse() == Mat2::identity());
      for (long long k = -4; k <= 4; ++k) CHECK(lattice_power(p, k) == matrix_power_iterated(m, k));
    }
    CHECK(lattice_lambda(1) == Mat2{2, 1, -1, 0});
  }

  TEST_CASE("circle operations") {
    Vec2 a{1, 0}, b{0, 1};
    CHECK(lattice_circ(a, b, 1, 0) == Vec2{1, 1});
    CHECK(lattice_circ(a, a, 1, 1) == Vec2{3, -1});
    CHECK(lattice_circ(Vec2{1, 1}, Vec2{0, 1}, 1, 1) == lattice_circ_iterated(Vec2{1, 1}, Vec2{0, 1}, 1, 1));
    for (long long i = 0; i < 4; ++i) {
      Vec2 v{3, -5};
      CHECK(lattice_circ(v, lattice_circ_inverse(v, 2, i), 2, i) == Vec2{});
      CHECK(lattice_circ_power(v, 3, 2, i) == lattice_circ(v, lattice_circ(v, v, 2, i), 2, i));
      CHECK(lattice_circ_power(v, -1, 2, i) == lattice_circ_inverse(v, 2, i));
    }
    // M x_2 = x_1 for p = 1, so x_1 ∘_1 x_2 = 2 x_1.
    CHECK(lattice_circ(Vec2{1, 0}, Vec2{0, 1}, 1, 1) == Vec2{2, 0});
    // x1 ∘_1 x1 with p = 1.
    CHECK(lattice_circ(Vec2{1, 0}, Vec2{1, 0}, 1, 1).str() == "(3,-1)");
  }

  TEST_CASE("overflow is reported") {
    auto big = std::numeric_limits<long long>::max();
    CHECK_THROWS_AS(checked_add(big, 1), Error);
    CHECK_THROWS_AS(checked_mul(big, 2), Error);
    CHECK(checked_mul(-3, 4) == -12);
  }

  TEST_CASE("system checks") {
    CHECK(lattice_system_check(0, 3, 100, 0).ok());
    CHECK(lattice_system_check(1, 3, 100, 0).ok());
    CHECK(lattice_system_check(-3, 2, 50, 5).ok());
    CHECK_THROWS_AS(lattice_system_check(1, 9, 10, 0), Error);
  }
}
