#include <doctest.h>

#include "oracles.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"

using namespace skb;

namespace {

std::vector<Perm> inversion_lambda(const FiniteGroup& g, const std::vector<int>& odd) {
  std::vector<Perm> lam(g.order(), identity_perm(g.order()));
  Perm inv(g.inverses().begin(), g.inverses().end());
  for (int a : odd) lam[a] = inv;
  return lam;
}

}  // namespace

TEST_SUITE("brace") {
  TEST_CASE("trivial and opposite braces") {
    auto g = symmetric3();
    auto t = SkewBrace::trivial(g);
    CHECK(t.is_trivial());
    auto c = classify(t);
    CHECK(c.trivial);
    CHECK(c.lambda_homomorphic);
    CHECK(c.symmetric);
    CHECK(c.two_sided);

    auto op = SkewBrace(g, g.opposite());
    CHECK(op.circ().same_table(g.opposite()));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(op.lambda(a, b) == g.conjugate(g.inv(a), b));
    auto co = classify(op);
    CHECK(co.natural);
    CHECK(co.lambda_anti_homomorphic);
    CHECK(co.symmetric);

    CHECK(opposite(t).add().same_table(g.opposite()));
  }

  TEST_CASE("non-brace pairs are rejected with a witness") {
    auto z4 = cyclic(4);
    auto v4 = group_by_name("Z2xZ2");
    auto r = verify_brace(z4, v4);
    // Every table pair on 4 points that is a brace appears in the enumeration.
    auto braces = oracle::latin_square_braces(z4);
    bool listed = braces.count(Perm(v4.flat().begin(), v4.flat().end())) > 0;
    CHECK(r.left_ok == listed);
    CHECK(is_left_brace(z4, v4) == listed);

    auto s3 = symmetric3();
    auto z6 = cyclic(6);
    auto bad = verify_brace(z6, s3);
    if (!bad.left_ok) {
      REQUIRE(bad.left_witness);
      CHECK_THROWS_AS(SkewBrace(z6, s3), Error);
    }
  }

  TEST_CASE("lambda maps are automorphisms with the documented flags") {
    auto z4 = cyclic(4);
    auto b = construct_from_lambda(z4, inversion_lambda(z4, {1, 3}), LambdaMode::Homomorphic);
    const auto& lam = b.lambda();
    CHECK(lam.kernel == std::vector<int>{0, 2});
    CHECK(lam.image_order == 2);
    CHECK(lam.image_exponent == 2);
    CHECK(lam.homomorphic_on_add);
    CHECK(lam.image_abelian);
    CHECK(b.circ().mul(1, 1) == 0);
    CHECK(b.circ_inv(1) == 1);
  }

  TEST_CASE("construct_from_lambda checks its hypotheses") {
    auto z4 = cyclic(4);
    auto lam = inversion_lambda(z4, {1});
    try {
      construct_from_lambda(z4, lam, LambdaMode::Homomorphic);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotHomomorphism);
    }
    auto z3 = cyclic(3);
    std::vector<Perm> not_aut(3, Perm{0, 0, 0});
    CHECK_THROWS_AS(construct_from_lambda(z3, not_aut, LambdaMode::Homomorphic), Error);
  }

  TEST_CASE("exact factorization of S3") {
    auto g = symmetric3();
    // Rotations are the normal subgroup of order 3; pick a reflection for B.
    std::vector<int> a = derived_subgroup(g);
    int r = -1;
    for (int x = 1; x < 6 && r < 0; ++x)
      if (g.element_order(x) == 2) r = x;
    auto b = construct_exact_factorization(g, a, {0, r});
    CHECK(b.order() == 6);
    CHECK(is_left_brace(b.add(), b.circ()));
    CHECK_THROWS_AS(construct_exact_factorization(g, a, a), Error);
  }

  TEST_CASE("unification requires an image abelian modulo the center") {
    auto g = symmetric3();
    Table alpha(6, std::vector<int>(6, 0));
    try {
      construct_unification(g, identity_perm(6), alpha, 1);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ImageNotAbelianModCenter);
    }
    auto t = construct_unification(g, Perm(6, 0), alpha, 1);
    CHECK(t.is_trivial());
    auto z4 = cyclic(4);
    Table a4(4, std::vector<int>(4, 0));
    auto b = construct_unification(z4, identity_perm(4), a4, 1);
    CHECK(is_left_brace(b.add(), b.circ()));
  }

  TEST_CASE("enumeration matches independent oracles") {
    for (const char* name : {"1", "Z2", "Z3", "Z4", "Z2xZ2"}) {
      auto g = group_by_name(name);
      auto ours = enumerate_circ_ops(g);
      std::set<oracle::Flat> got;
      for (const auto& b : ours) got.insert(oracle::Flat(b.circ().flat().begin(), b.circ().flat().end()));
      CHECK_MESSAGE(got == oracle::latin_square_braces(g), name);
    }
    for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
      auto g = group_by_name(name);
      std::set<oracle::Flat> got;
      for (const auto& b : enumerate_circ_ops(g)) got.insert(oracle::Flat(b.circ().flat().begin(), b.circ().flat().end()));
      CHECK_MESSAGE(got == oracle::regular_subgroup_braces(g), name);
    }
    CHECK(enumerate_circ_ops(symmetric3()).size() == 8);
    CHECK(enumerate_circ_ops(group_by_name("Z2xZ2xZ2")).size() == 232);
  }

  TEST_CASE("symmetry criterion agrees with the direct check") {
    for (const auto& g : small_groups(6))
      for (const auto& b : enumerate_circ_ops(g)) {
        auto c = classify(b);
        CHECK(c.symmetric == is_left_brace(b.circ(), b.add()));
        CHECK(c.symmetric == oracle::lambda_symmetry_criterion(b.add(), b.circ()));
      }
  }

  TEST_CASE("isomorphism and relabeling") {
    auto g = cyclic(4);
    auto bs = enumerate_circ_ops(g);
    REQUIRE(bs.size() == 2);
    CHECK(brace_isomorphic(bs[0], bs[0]) == identity_perm(4));
    CHECK_FALSE(brace_isomorphic(bs[0], bs[1]).has_value());
    Perm phi{0, 3, 2, 1};
    auto moved = relabel(bs[1], phi);
    auto iso = brace_isomorphic(bs[1], moved);
    REQUIRE(iso);
    CHECK((*iso)[0] == 0);
  }

  TEST_CASE("opposite symmetry and link checks") {
    auto z4 = cyclic(4);
    auto b = construct_from_lambda(z4, inversion_lambda(z4, {1, 3}), LambdaMode::Homomorphic);
    auto os = opposite_symmetry_check(b);
    CHECK(os.agree);
    auto g = symmetric3();
    CHECK_THROWS_AS(opposite_symmetry_check(SkewBrace(g, g.opposite())), Error);

    auto link = link_check(b, SkewBrace::trivial(z4));
    CHECK(link.is_brace);
    CHECK_THROWS_AS(link_check(b, SkewBrace::trivial(group_by_name("Z2xZ2"))), Error);

    auto cc = cross_compatibility_check(z4, b.circ(), z4);
    if (cc.condition_holds) CHECK(cc.is_brace);
  }
}
