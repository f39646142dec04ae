#include "doctest.h"
#include "helpers.hpp"
#include "terracini/serialization.hpp"

using namespace terracini;
using testutil::pt;

TEST_SUITE("serialization") {
  TEST_CASE("point set round trip") {
    PrimeField f;
    auto s = testutil::random_points(f, 3, 7, 12);
    auto doc = point_set_document(f, s, 5);
    auto in = parse_scheme(doc.dump());
    CHECK(in.is_point_set);
    CHECK(in.n == 3);
    CHECK(in.d.value() == 5);
    CHECK(in.field.modulus() == f.modulus());
    CHECK(in.points == s);
    CHECK(in.scheme().degree() == 28);
  }

  TEST_CASE("negative coordinates are reduced and points normalized") {
    auto in = parse_scheme(R"({"points": [[2, -2, 4], [0, 3, 1]]})");
    PrimeField f;
    CHECK(in.n == 2);
    CHECK(in.points[0] == pt(f, {1, -1, 2}));
    CHECK(in.points[1].coords()[1] == 1);
  }

  TEST_CASE("scheme components round trip") {
    PrimeField f(kSecondPrime);
    ZeroDimScheme z(f, 2);
    z.add(Component::simple(pt(f, {1, 2, 3})));
    z.add(Component::jet(f, pt(f, {1, 0, 0}), {0, 1, 5}));
    z.add(Component::doubled(pt(f, {0, 1, 0})));
    auto in = parse_scheme(to_json(z).dump());
    CHECK(!in.is_point_set);
    CHECK(in.field.modulus() == kSecondPrime);
    auto back = in.scheme();
    CHECK(back.components() == z.components());
    CHECK(to_json(back) == to_json(z));
  }

  TEST_CASE("syntax errors carry line and column") {
    const std::string text = "{\n  \"points\": [[1, 2, 3],\n  [4, 5 6]]\n}";
    try {
      parse_scheme(text);
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 9);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("structural errors carry a pointer") {
    auto pointer_of = [](const std::string& text) {
      try {
        parse_scheme(text);
      } catch (const ParseError& e) {
        return e.pointer();
      }
      return std::string("none");
    };
    CHECK(pointer_of(R"({"points": [[1, 2, 3], [1, 2]]})") == "/points/1");
    CHECK(pointer_of(R"({"points": [[1, 2, 3], [2, 4, 6]]})") == "/points/1");
    CHECK(pointer_of(R"({"points": [[0, 0, 0]]})") == "/points/0");
    CHECK(pointer_of(R"({"points": [[1, "a", 3]]})") == "/points/0/1");
    CHECK(pointer_of(R"({"prime": 100, "points": [[1, 2, 3]]})") == "/prime");
    CHECK(pointer_of(R"({"components": [{"kind": "fat", "point": [1, 0, 0]}]})") == "/components/0/kind");
    CHECK(pointer_of(R"({"components": [{"kind": "jet", "point": [1, 0, 0], "direction": [2, 0, 0]}]})") ==
          "/components/0/direction");
    CHECK(pointer_of(R"({"n": 2})") == "");
    CHECK(pointer_of(R"([1, 2])") == "");
  }

  TEST_CASE("prime override") {
    auto in = parse_scheme(R"({"prime": 2147483629, "points": [[1, 2, 3]]})", kDefaultPrime);
    CHECK(in.field.modulus() == kDefaultPrime);
  }

  TEST_CASE("reports serialize deterministically") {
    PrimeField f;
    auto s = testutil::random_points(f, 2, 5, 1);
    auto r = cohomology(double_scheme(f, s), 4);
    auto a = to_json(r).dump();
    auto b = to_json(cohomology(double_scheme(f, s), 4)).dump();
    CHECK(a == b);
    CHECK(to_json(r)["h1"] == 1);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_scheme("/nonexistent/file.json"), ParseError);
  }
}
