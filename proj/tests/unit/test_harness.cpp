#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "terracini/harness.hpp"

using namespace terracini;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SuiteConfig small(const std::string& suite, std::vector<int> n, std::vector<int> d, int trials) {
  SuiteConfig c;
  c.suite = suite;
  c.n_values = std::move(n);
  c.d_values = std::move(d);
  c.trials = trials;
  return c;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("suite registry") {
    CHECK(suite_ids().size() == 12);
    for (const auto& id : suite_ids()) CHECK(default_config(id).suite == id);
    CHECK_THROWS_AS(default_config("nope"), Error);
    const auto c = default_config("ooo1");
    CHECK(c.d_values == std::vector<int>{4, 5, 6, 7, 8});
    CHECK(c.trials == 200);
  }

  TEST_CASE("reports do not depend on worker count") {
    auto cfg = small("43", {2, 3}, {4, 5}, 15);
    cfg.seed = 7;
    const auto a = run_suite(cfg).to_json(false).dump();
    cfg.workers = 4;
    const auto b = run_suite(cfg).to_json(false).dump();
    CHECK(a == b);
    CHECK(run_suite(cfg).to_json(false).dump() == a);
    cfg.seed = 8;
    CHECK(run_suite(cfg).to_json(false).dump() != a);
  }

  TEST_CASE("emptiness records always carry a refutation") {
    auto cfg = small("ooo1", {3}, {5}, 20);
    cfg.x_values = {6, 7, 8};
    const auto r = run_suite(cfg);
    CHECK(r.passed);
    CHECK(r.counterexamples == 0);
    REQUIRE(r.cells.size() == 3);
    std::size_t hits = 0;
    for (const auto& c : r.cells)
      for (const auto& rec : c.body["records"]) {
        CHECK(rec.contains("refutation"));
        CHECK(rec["refutation"].get<std::string>() != "");
        if (rec["verdict"] == "terracini_not_minimal") {
          ++hits;
          CHECK(!rec["violating_subset"].empty());
          CHECK(rec["critical_h1"] == 1);
          CHECK(rec["witness"]["kind"] != "none");
        }
      }
    // The collinear generators at ceil(d/2) + 1 = 4 points always hit.
    CHECK(hits > 0);
  }

  TEST_CASE("report document") {
    const auto r = run_suite(small("a9.0", {2}, {4}, 1));
    CHECK(r.passed);
    const auto j = r.to_json();
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["note"].get<std::string>().find("evidence, not proof") != std::string::npos);
    CHECK(j.contains("timing"));
    CHECK(j.contains("environment"));
    CHECK(!r.to_json(false).contains("timing"));
    CHECK(!j["config"].contains("workers"));
    // x = 1 + ceil(nd/2) = 5 on a conic: a member with bounds and a critical scheme.
    const auto& rec = j["cells"][0]["records"][0];
    CHECK(rec["verdict"] == "member");
    CHECK(rec["critical"]["h1"] == 1);
    CHECK(rec["critical"]["full_support"] == true);
    CHECK(rec["bounds"].size() == 4);
    CHECK(rec["other_primes"].size() == 1);
  }

  TEST_CASE("grids outside the theorem are rejected") {
    auto c43 = small("43", {2}, {4}, 1);
    c43.x_values = {4};
    CHECK_THROWS_AS(run_suite(c43), ParameterOutOfTheoremRange);
    CHECK_THROWS_AS(run_suite(small("ceo1", {3}, {16}, 1)), ParameterOutOfTheoremRange);
    CHECK_THROWS_AS(run_suite(small("ex4d", {3}, {7}, 1)), ParameterOutOfTheoremRange);
    CHECK_THROWS_AS(run_suite(small("ooo1", {3}, {3}, 1)), ParameterOutOfTheoremRange);
    auto tiny = small("43", {2}, {4}, 1);
    tiny.primes = {101};
    CHECK_THROWS_AS(run_suite(tiny), Error);
  }

  TEST_CASE("line pairs in the plane") {
    const auto r = run_suite(small("n2a1", {2}, {5}, 3));
    CHECK(r.passed);
    for (const auto& c : r.cells) {
      if (c.body.value("part", "") != "b-reducible") continue;
      for (const auto& rec : c.body["records"]) {
        const bool member = rec["verdict"] == "member";
        CHECK(member == (rec["split"] == Json{3, 3} && rec["node"] == false));
      }
    }
  }

  TEST_CASE("counterexample slot") {
    SuiteReport r;
    r.suite = "43";
    CellReport c;
    c.passed = false;
    c.counterexamples = 1;
    c.body = {{"n", 2}, {"d", 4}, {"x", 3},
              {"records", Json::array({{{"ok", true}}, {{"ok", false}, {"counterexample", true}, {"seed", 9}}})}};
    r.cells.push_back(c);
    r.passed = false;
    try {
      throw_if_counterexample(r);
      FAIL("no exception");
    } catch (const CounterexampleFound& e) {
      CHECK(e.certificate()["record"]["seed"] == 9);
      CHECK(e.certificate()["cell"]["x"] == 3);
    }
    r.cells[0].passed = true;
    CHECK_NOTHROW(throw_if_counterexample(r));
  }

  TEST_CASE("check on the rational normal curve fixture") {
    const auto text = fixture("rnc_3_7_12.json");
    CheckOptions opt;
    opt.cross_primes = {kSecondPrime};
    const auto j = check_scheme(text, std::nullopt, opt);
    CHECK(j["verdict"] == "minimally_terracini");
    // On the curve 2x - nd - 1 = 2, and the independent oracle agrees.
    const auto in = parse_scheme(text);
    CHECK(j["cohomology"]["h1"] == 2);
    CHECK(oracle::h_oracle(in.scheme(), 7).h1 == 2);
    CHECK(j["other_primes"][0]["agrees"] == true);
    CHECK(j["bounds"].size() == 4);
  }

  TEST_CASE("check on the coplanar fixture") {
    CheckOptions opt;
    opt.critical = true;
    opt.witness = true;
    const auto j = check_scheme(fixture("coplanar_3_3_5.json"), std::nullopt, opt);
    CHECK(j["verdict"] != "minimally_terracini");
    CHECK(j["membership"]["minimal"] == false);
    CHECK(j["critical"]["h1"] == 1);
    CHECK(j["witness"].contains("kind"));
  }

  TEST_CASE("check errors") {
    try {
      check_scheme(fixture("malformed.json"), 3, {});
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(check_scheme(R"({"points": [[1, 2, 3]]})", std::nullopt, {}), Error);
  }
}
