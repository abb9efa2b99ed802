#include <doctest.h>

#include "skewbrace/catalog.hpp"
#include "skewbrace/rota_baxter.hpp"

using namespace skb;

namespace {

Perm inversion(const FiniteGroup& g) { return Perm(g.inverses().begin(), g.inverses().end()); }

}  // namespace

TEST_SUITE("rota_baxter") {
  TEST_CASE("standard operators") {
    for (const auto& g : small_groups(8)) {
      int n = g.order();
      CHECK(is_rb(g, Perm(n, 0)).ok);
      CHECK(is_rb(g, inversion(g)).ok);
      auto b = rb_brace(g, inversion(g));
      CHECK(b.circ().same_table(g.opposite()));
      auto t = rb_brace(g, Perm(n, 0));
      CHECK(t.is_trivial());
    }
  }

  TEST_CASE("non-operators are rejected") {
    auto g = cyclic(3);
    Perm b{0, 1, 1};
    auto r = is_rb(g, b);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.has_value());
    CHECK_THROWS_AS(derived_group(g, b), Error);
  }

  TEST_CASE("criteria agree on every operator of small groups") {
    int total = 0;
    for (const auto& g : small_groups(6)) {
      auto ops = find_rb_operators(g, false);
      total += static_cast<int>(ops.size());
      for (const auto& b : ops) {
        CHECK(rb_symmetry_check(g, b).agree);
        CHECK(rb_lambda_hom_check(g, b).agree);
        auto s = rb_second_level_check(g, b);
        CHECK(s.circ2_matches);
        CHECK(s.lambda1_matches);
      }
    }
    CHECK(total == 45);
    CHECK(find_rb_operators(cyclic(4), true).size() <= find_rb_operators(cyclic(4), false).size());
  }

  TEST_CASE("word expansion") {
    auto g = symmetric3();
    auto b = inversion(g);
    std::vector<CircLetter> word{{1, 2}, {3, -1}, {4, 3}};
    auto e = circ_word_expand(g, b, word);
    CHECK(e.folded == e.formula);
  }

  TEST_CASE("free examples") {
    auto a = FreeWord::parse("x1 x2", 2);
    auto b = FreeWord::parse("x2", 2);
    CHECK(free_rb_example(0, a, b) == a * b);
    CHECK(free_rb_example(1, a, b).str() == "x1 x2 x1^2 x2 x1^-2");
    auto r = free_rb_check(3, 100, 6, 0);
    CHECK(r.rb_failures == 0);
    CHECK(r.multibrace_failures == 0);
    CHECK(r.recursion_failures == 0);

    std::vector<FreeWord> x1x1{FreeWord::generator(2, 1), FreeWord::generator(2, 1)};
    CHECK(free_operator_apply(x1x1, FreeWord::parse("x2^3 x1^-1", 2)).str() == "x1^2");
    CHECK(free_is_rb(x1x1, 100, 6, 0).failures == 0);
    std::vector<FreeWord> swap{FreeWord::generator(2, 2), FreeWord::generator(2, 1)};
    CHECK(free_is_rb(swap, 100, 6, 0).failures > 0);
  }
}
