#include <doctest.h>

#include "skewbrace/catalog.hpp"
#include "skewbrace/system.hpp"

using namespace skb;

namespace {

std::vector<Perm> inversion_on_odd(const FiniteGroup& g, int modulus, int stride) {
  std::vector<Perm> lam(g.order(), identity_perm(g.order()));
  Perm inv(g.inverses().begin(), g.inverses().end());
  for (int a = 0; a < g.order(); ++a)
    if ((a / stride) % modulus == 1) lam[a] = inv;
  return lam;
}

}  // namespace

TEST_SUITE("system") {
  TEST_CASE("linear system on Z4 has period two") {
    auto z4 = cyclic(4);
    auto s = build_linear_system(z4, inversion_on_odd(z4, 2, 1));
    CHECK(s.kind == SystemKind::Linear);
    CHECK(s.image_exponent == 2);
    CHECK(s.all_pairs_verified());
    REQUIRE(detect_period(s));
    CHECK(*detect_period(s) == 2);
    auto lr = level_report(s);
    CHECK(lr.kernel_same);
    CHECK(lr.image_same);
    CHECK(lr.lambda_automorphism_everywhere);
    CHECK(lr.closed_form_holds);
    CHECK(s.vertex_of_level(0) == 0);
    CHECK(export_dot(s).find("digraph") != std::string::npos);
  }

  TEST_CASE("linear system on Z2xZ4 with negative levels") {
    auto g = group_by_name("Z2xZ4");
    auto lam = inversion_on_odd(g, 2, 1);
    auto s = build_linear_system(g, lam, 3, true);
    CHECK(s.all_pairs_verified());
    CHECK(detect_period(s) == s.image_exponent);
    auto lr = level_report(s);
    CHECK(lr.kernel_same);
    CHECK(lr.image_same);
  }

  TEST_CASE("linear system preconditions") {
    auto s3 = symmetric3();
    std::vector<Perm> lam(6);
    for (int a = 0; a < 6; ++a) {
      lam[a].resize(6);
      for (int b = 0; b < 6; ++b) lam[a][b] = s3.conjugate(a, b);
    }
    try {
      build_linear_system(s3, lam);
      FAIL("expected PreconditionFails");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PreconditionFails);
    }
  }

  TEST_CASE("union and rooted systems") {
    auto z4 = cyclic(4);
    auto a = build_linear_system(z4, inversion_on_odd(z4, 2, 1));
    auto u = union_systems(a, a);
    CHECK(u.vertices.size() == a.vertices.size());
    auto r = rooted_system(z4, enumerate_circ_ops(z4));
    for (const auto& e : r.edges)
      if (e.from == 0) CHECK(e.status == EdgeStatus::Verified);
  }

  TEST_CASE("Rota-Baxter multibrace keeps consecutive pairs") {
    auto g = symmetric3();
    Perm b(g.inverses().begin(), g.inverses().end());
    auto s = build_rb_multibrace(g, b, 3);
    CHECK(s.vertices.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(s.edge(i, i + 1) == EdgeStatus::Verified);
  }
}
