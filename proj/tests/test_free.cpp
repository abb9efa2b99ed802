#include <doctest.h>

#include "skewbrace/schreier.hpp"

using namespace skb;

TEST_SUITE("free") {
  TEST_CASE("parsing, reduction and printing") {
    auto w = FreeWord::parse("x1 x2 x2^-1 x1^2", 2);
    CHECK(w.str() == "x1^3");
    CHECK(FreeWord::parse("x1x2", 2) == FreeWord::generator(2, 1) * FreeWord::generator(2, 2));
    CHECK(FreeWord::parse("1", 3).empty());
    CHECK(FreeWord::parse("", 3).str() == "1");
    CHECK_THROWS_AS(FreeWord::parse("x3", 2), Error);
    CHECK_THROWS_AS(FreeWord::parse("y1", 2), Error);
    auto u = FreeWord::parse("x1^2 x2^-3", 2);
    CHECK(u.length() == 5);
    CHECK(u.exp_sum() == -1);
    CHECK((u * u.inverse()).empty());
    CHECK(u.pow(-2) == u.inverse() * u.inverse());
    CHECK(u.pow(0).empty());
  }

  TEST_CASE("automorphisms") {
    auto th = FreeAutomorphism::cycle(3);
    auto x1 = FreeWord::generator(3, 1);
    CHECK(th.apply(x1) == FreeWord::generator(3, 2));
    CHECK(th.apply_power(3, x1) == x1);
    CHECK(th.apply_power(-1, x1) == FreeWord::generator(3, 3));
    CHECK(FreeAutomorphism::power(th, 3).is_identity());
    CHECK(FreeAutomorphism::identity(3).is_identity());
    auto inn = FreeAutomorphism::inner(FreeWord::parse("x1 x2", 3));
    auto x3 = FreeWord::generator(3, 3);
    CHECK(inn.apply(x3).str() == "x1 x2 x3 x2^-1 x1^-1");
    CHECK(inn.inverse().apply(inn.apply(x3)) == x3);
    auto c = FreeAutomorphism::compose({th, inn});
    CHECK(c.apply(x3) == th.apply(inn.apply(x3)));
  }

  TEST_CASE("circle operation and inverse") {
    auto th = FreeAutomorphism::cycle(2);
    auto a = FreeWord::parse("x1^2 x2^-1", 2);
    auto b = FreeWord::parse("x2 x1", 2);
    CHECK(circ_eval(a, b, th) == a * th.apply(b));
    CHECK(circ_eval(a, circ_inverse(a, th), th).empty());
  }

  TEST_CASE("sampler is deterministic") {
    WordSampler s1(3, 42), s2(3, 42), s3(3, 43);
    bool differs = false;
    for (int i = 0; i < 50; ++i) {
      auto w = s1.next();
      CHECK(w == s2.next());
      differs = differs || !(w == s3.next());
    }
    CHECK(differs);
    WordSampler k(2, 7);
    for (int i = 0; i < 20; ++i) CHECK(k.next_in_kernel().exp_sum() == 0);
    for (int i = 0; i < 20; ++i) CHECK(k.next_in_kernel(3).exp_sum() % 3 == 0);
  }

  TEST_CASE("sampled brace checks") {
    CHECK(sampled_brace_check(FreeAutomorphism::cycle(2), 200, 6, 0).ok());
    CHECK(sampled_brace_check(FreeAutomorphism::inner(FreeWord::parse("x1x2", 3)), 200, 6, 0).ok());
    CHECK(sampled_brace_check(FreeAutomorphism::identity(2), 100, 6, 1).ok());
  }

  TEST_CASE("Schreier rewriting") {
    SchreierRewriter r(3, std::nullopt);
    CHECK(r.expand(SchreierGen{false, 1, 5}).empty());
    auto z = SchreierGen{false, 2, 1};
    CHECK(z.name() == "z_{2,1}");
    CHECK(r.expand(z).str() == "x1 x2 x1^-2");
    auto w = FreeWord::parse("x2 x1^-1 x3 x1^-1 x1 x2^-1", 3);
    CHECK(r.expand(r.rewrite(w)) == w);
    CHECK_THROWS_AS(r.rewrite(FreeWord::parse("x2", 3)), Error);

    SchreierRewriter m(3, 3);
    CHECK(m.generators().size() == 7);
    auto v = FreeWord::parse("x2^3", 3);
    CHECK(m.expand(m.rewrite(v)) == v);
    CHECK(SchreierGen{true, 2, 0}.name() == "y_2");
  }

  TEST_CASE("holomorph arithmetic") {
    auto th = FreeAutomorphism::cycle(2);
    HolWord x{1, FreeWord::parse("x1", 2)};
    HolWord y{-2, FreeWord::parse("x2^2", 2)};
    auto e = hol_mul(x, hol_inv(x, th), th);
    CHECK(e.p == 0);
    CHECK(e.a.empty());
    auto xy = hol_mul(x, y, th);
    CHECK(xy.p == -1);
    CHECK(xy.a == x.a * th.apply(y.a));
  }

  TEST_CASE("cyclic theorem for small n") {
    for (int n = 2; n <= 5; ++n) {
      auto r = verify_cyclic1(n);
      CHECK(r.ok());
      CHECK(r.generator_count == n * n - n + 1);
      CHECK(r.nielsen_schreier == r.generator_count);
      CHECK_NOTHROW(require_verified(r));
    }
    auto r3 = verify_cyclic1(3);
    CHECK_FALSE(r3.printed_variants.empty());
    for (const auto& f : r3.printed_variants) CHECK_FALSE(f.holds);
    CHECK_THROWS_AS(verify_cyclic1(1), Error);
    CHECK_THROWS_AS(verify_cyclic1(7), Error);
  }

  TEST_CASE("inner automorphism theorem") {
    auto w = FreeWord::parse("x1 x2 x1 x2^-1 x1^-1", 2);
    auto r = verify_t4(2, w);
    CHECK(r.ok());
    CHECK(r.m == 1);
    CHECK(r.shift_failures == 0);
    CHECK(r.fundamental_count == 2);
    CHECK_FALSE(r.printed_recurrence_consistent);

    auto d = verify_t4(2, FreeWord::parse("x1^-1 x2 x1 x2^-1 x1^-1", 2));
    CHECK(d.direct_product);
    CHECK_FALSE(d.fundamental_count.has_value());

    CHECK_THROWS_AS(verify_t4(2, FreeWord::parse("1", 2)), Error);
    CHECK_THROWS_AS(verify_t4(2, FreeWord::parse("x1^4", 2), 2), Error);
  }
}
