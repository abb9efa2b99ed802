#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = skb::cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const char* name) { return std::string(SKEWBRACE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify-group on a file and a named group") {
    auto r = run({"verify-group", "--in", data("z4.json")});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["group_ok"] == true);
    CHECK(j["order"] == 4);
    CHECK(j["automorphism_count"] == 2);
    CHECK(j["config"]["command"] == "verify-group");

    auto s = run({"verify-group", "--group", "S3"});
    CHECK(json::parse(s.out)["center"] == json::array({0}));
  }

  TEST_CASE("malformed input exits with code 2") {
    CHECK(run({"verify-group", "--in", data("missing.json")}).code == 2);
    CHECK(run({"verify-group", "--group", "Foo"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"enumerate", "--group", "S3", "--format", "dot"}).code == 2);
    auto bad = run({"verify-group", "--in", data("bad_table.json")});
    CHECK(bad.code != 0);
  }

  TEST_CASE("brace commands") {
    auto v = run({"verify-brace", "--in", data("z4_brace.json")});
    REQUIRE(v.code == 0);
    CHECK(json::parse(v.out)["left_ok"] == true);

    auto c = run({"classify", "--group", "S3", "--brace", "op"});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["classify"]["natural"] == true);

    auto e = run({"enumerate", "--group", "Z2xZ2", "--no-tables"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["count"] == 4);

    auto k = run({"construct", "--group", "Z4", "--kind", "lambda", "--lambda", data("z4_lambda.json")});
    CHECK(k.code == 0);
  }

  TEST_CASE("system, structure and dot output") {
    auto s = run({"system", "--group", "Z4", "--kind", "linear", "--lambda", data("z4_lambda.json")});
    REQUIRE(s.code == 0);
    auto j = json::parse(s.out);
    CHECK(j["system"]["all_pairs_verified"] == true);
    CHECK(j["period"] == 2);
    auto d = run({"--format", "dot", "system", "--group", "Z4", "--kind", "linear", "--lambda", data("z4_lambda.json")});
    CHECK(d.code == 0);
    CHECK(d.out.find("digraph") != std::string::npos);

    auto st = run({"structure", "--group", "S3", "--brace", "op"});
    REQUIRE(st.code == 0);
    CHECK(json::parse(st.out)["st"] == 2);
  }

  TEST_CASE("free group, lattice and Rota-Baxter commands") {
    auto c = run({"freegroup", "verify-cyclic", "--n", "4"});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["generator_count"] == 13);

    auto t = run({"freegroup", "verify-t4", "--n", "2", "--w", "x1 x2 x1 x2^-1 x1^-1"});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out)["fundamental_count"] == 2);

    auto rw = run({"freegroup", "rewrite", "--n", "2", "--w", "x2 x1^-1"});
    REQUIRE(rw.code == 0);
    CHECK(json::parse(rw.out)["product"] == "z_{2,0}");

    auto l = run({"lattice", "--p", "1", "--a", "1", "0", "--b", "1", "0", "--level", "1"});
    REQUIRE(l.code == 0);
    CHECK(json::parse(l.out)["circ"] == json::array({3, -1}));

    auto rb = run({"rb", "--group", "S3", "--search"});
    REQUIRE(rb.code == 0);
    CHECK(json::parse(rb.out)["count"].get<int>() >= 2);
  }

  TEST_CASE("reports are deterministic for a fixed seed") {
    std::vector<std::string> args{"--seed", "9", "--samples", "50", "freegroup", "check", "--n", "3", "--theta", "cycle"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
