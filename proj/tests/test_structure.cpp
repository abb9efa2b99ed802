#include <doctest.h>

#include <algorithm>

#include "skewbrace/catalog.hpp"
#include "skewbrace/structure.hpp"

using namespace skb;

TEST_SUITE("structure") {
  TEST_CASE("ideals of the opposite brace on S3") {
    auto g = symmetric3();
    SkewBrace b(g, g.opposite());
    auto rot = derived_subgroup(g);
    CHECK(is_ideal(b, rot).ok());
    CHECK(is_ideal(b, {0}).ok());
    auto refl = is_ideal(b, {0, 3});
    CHECK_FALSE(refl.ok());

    auto ideals = all_ideals(b);
    CHECK(ideals.front() == std::vector<int>{0});
    CHECK(ideals.back().size() == 6);
    CHECK(std::find(ideals.begin(), ideals.end(), rot) != ideals.end());

    auto q = quotient_brace(b, rot);
    CHECK(q.order() == 2);
    CHECK(q.is_trivial());
    CHECK_THROWS_AS(quotient_brace(b, {0, 3}), Error);
    auto ci = coset_index(b, rot);
    for (int x : rot) CHECK(ci[x] == 0);
  }

  TEST_CASE("triviality step") {
    auto g = symmetric3();
    auto st = triviality_step(SkewBrace(g, g.opposite()));
    REQUIRE(st);
    CHECK(st->step == 2);
    REQUIRE(st->chain.size() == 3);
    CHECK(st->chain[0] == std::vector<int>{0});
    CHECK(st->chain[1] == derived_subgroup(g));
    CHECK(st->chain[2].size() == 6);

    auto t = triviality_step(SkewBrace::trivial(g));
    REQUIRE(t);
    CHECK(t->step == 1);
    auto one = triviality_step(SkewBrace::trivial(FiniteGroup()));
    REQUIRE(one);
    CHECK(one->step == 0);

    Limits tight;
    tight.max_structure_order = 4;
    CHECK_THROWS_AS(triviality_step(SkewBrace::trivial(g), tight), Error);
  }

  TEST_CASE("kernel ideal") {
    for (const auto& b : enumerate_circ_ops(cyclic(4))) {
      auto k = kernel_ideal(b);
      CHECK(k.ok());
      CHECK(k.elements == b.lambda().kernel);
    }
  }

  TEST_CASE("naturality and brace automorphisms") {
    auto g = symmetric3();
    SkewBrace op(g, g.opposite());
    auto n = naturality_report(op);
    CHECK(n.is_natural);
    auto z4 = cyclic(4);
    auto bs = enumerate_circ_ops(z4);
    for (const auto& b : bs) {
      auto autos = brace_automorphisms(b);
      CHECK(autos.front().images == identity_perm(4));
    }
    CHECK(brace_automorphisms(SkewBrace::trivial(g)).size() == 6);
  }
}
