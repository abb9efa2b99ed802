#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "skewbrace/catalog.hpp"

using namespace skb;

TEST_SUITE("group") {
  TEST_CASE("verify_group accepts small tables and normalizes the identity") {
    auto one = verify_group({{0}});
    REQUIRE(one.ok());
    CHECK(one.group->order() == 1);

    auto z4 = verify_group(cyclic(4).table());
    REQUIRE(z4.ok());
    CHECK(z4.group->same_table(cyclic(4)));

    // Z3 with identity stored at label 2.
    Table shifted{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    auto v = verify_group(shifted);
    REQUIRE(v.ok());
    CHECK(v.relabeling[2] == 0);
    CHECK(v.group->is_abelian());
  }

  TEST_CASE("corrupted tables report the violated axiom") {
    Table t = cyclic(4).table();
    t[1][1] = 1;
    auto v = verify_group(t);
    CHECK_FALSE(v.ok());
    REQUIRE_FALSE(v.violations.empty());
    CHECK(v.violations.front().kind == Errc::NotLatinSquare);
    CHECK(v.violations.front().witness.front() == 1);

    CHECK_THROWS_AS(verify_group({{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", t), Error);
  }

  TEST_CASE("automorphism groups agree with a scan over all permutations") {
    for (const char* name : {"1", "Z3", "Z4", "Z2xZ2", "S3", "Z6", "D4", "Q8"}) {
      auto g = group_by_name(name);
      auto autos = automorphism_group(g);
      auto scan = oracle::automorphisms_by_scan(g);
      std::vector<Perm> mine;
      for (const auto& f : autos) mine.push_back(f.images);
      CHECK_MESSAGE(mine == scan, name);
      CHECK(autos.front().images == identity_perm(g.order()));
    }
    CHECK(automorphism_group(cyclic(3)).size() == 2);
    CHECK(automorphism_group(symmetric3()).size() == 6);
    CHECK(automorphism_group(FiniteGroup()).size() == 1);
  }

  TEST_CASE("center, derived subgroup and inner automorphisms") {
    auto s3 = structure_subgroups(symmetric3());
    CHECK(s3.center == std::vector<int>{0});
    CHECK(s3.derived_subgroup.size() == 3);
    CHECK(s3.inner_automorphisms.size() == 6);

    auto z4 = structure_subgroups(cyclic(4));
    CHECK(z4.center.size() == 4);
    CHECK(z4.derived_subgroup == std::vector<int>{0});

    auto d4 = dihedral(4);
    auto z = center(d4), d = derived_subgroup(d4);
    CHECK(z.size() == 2);
    CHECK(d.size() == 2);
    CHECK(std::includes(z.begin(), z.end(), d.begin(), d.end()));
    CHECK(nilpotency_class(dihedral(8)) == 3);
    CHECK(dihedral(8).order() == 16);
    CHECK(nilpotency_class(symmetric3()) == std::nullopt);
  }

  TEST_CASE("holomorph orders and regular subgroups") {
    CHECK(Holomorph::build(cyclic(3)).order() == 6);
    CHECK(Holomorph::build(FiniteGroup()).order() == 1);
    auto h = Holomorph::build(cyclic(4));
    CHECK(h.order() == 8);
    auto hg = h.to_group();
    CHECK(hg.order() == 8);
    CHECK_FALSE(Holomorph::build(cyclic(3)).to_group().is_abelian());

    std::vector<int> none;
    CHECK(subgroup_closure(h, none) == std::vector<int>{0});
    std::vector<int> t1{h.index_of(0, 1)};
    auto trans = subgroup_closure(h, t1);
    CHECK(trans.size() == 4);
    CHECK(is_regular_subgroup(h, trans));

    int neg = h.aut_index({0, 3, 2, 1});
    std::vector<int> bad{h.index_of(0, 0), h.index_of(0, 2), h.index_of(neg, 0), h.index_of(neg, 2)};
    std::sort(bad.begin(), bad.end());
    CHECK_FALSE(is_regular_subgroup(h, bad));
    std::vector<int> good{h.index_of(0, 0), h.index_of(0, 2), h.index_of(neg, 1), h.index_of(neg, 3)};
    std::sort(good.begin(), good.end());
    CHECK(is_regular_subgroup(h, good));
    std::vector<int> open{h.index_of(0, 0), h.index_of(0, 1)};
    CHECK_THROWS_AS(is_regular_subgroup(h, open), Error);
  }

  TEST_CASE("catalog names and permutation groups") {
    CHECK(group_by_name("Z2xZ4").order() == 8);
    CHECK(group_by_name("Dic3").order() == 12);
    CHECK(alternating4().order() == 12);
    CHECK(small_groups(12).size() == 24);
    CHECK_THROWS_AS(group_by_name("Foo7"), Error);
    auto p = parse_cycles("(1 2)(3 4)", 4);
    CHECK(format_cycles(p) == "(1 2)(3 4)");
    CHECK_THROWS_AS(parse_cycles("(1 5)", 4), Error);
    auto k = permutation_group("V4", 4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
    CHECK(k.order() == 4);
    CHECK(k.is_abelian());
  }
}
