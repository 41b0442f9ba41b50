#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icm/io.hpp"
#include "icm/properties.hpp"
#include "oracles.hpp"

using namespace icm;
using oracle::ideal;

TEST_CASE("parse_ideal") {
  CHECK(parse_ideal("x^2, x*y, y^2") == ideal({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(parse_ideal("x,y,z") == MonomialIdeal::maximal(3));
  CHECK(parse_ideal("x1^3*x4") == ideal({{3, 0, 0, 1}}));
  CHECK(parse_ideal("x*x*y^2*y") == ideal({{2, 3}}));
  CHECK(parse_ideal("1", 3) == MonomialIdeal::unit(3));
  CHECK(parse_ideal("y", 3) == ideal({{0, 1, 0}}));
  CHECK(parse_ideal("x^2, x^3*y") == ideal({{2, 0}}));
  CHECK(parse_ideal(" x ^ 2 ,y ").dim() == 2);
  const auto big = parse_ideal("x^99999999999999999999");
  CHECK(big.gens().front()[0] == Integer("99999999999999999999"));
}

TEST_CASE("parse_ideal errors carry a position") {
  auto position_of = [](std::string_view text) -> long {
    try {
      parse_ideal(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("x, 0") == 3);
  CHECK(position_of("x^2 + y") == 4);
  CHECK(position_of("2*x") == 0);
  CHECK(position_of("x^") == 2);
  CHECK(position_of("x, q") == 3);
  CHECK(position_of("x0") == 0);
  CHECK(position_of("x99999999999") == 0);
  CHECK_THROWS_AS(parse_ideal("z", 2), ParseError);
}

TEST_CASE("render") {
  CHECK(render(ideal({{2, 0}, {1, 1}, {0, 2}})) == "x^2, x*y, y^2");
  CHECK(render(MonomialIdeal::unit(2)) == "1");
  CHECK(render(ideal({{1, 0, 0, 0, 2}})) == "x1*x5^2");
}

TEST_CASE("render and parse round trip") {
  gen::Engine rng(29);
  for (int n = 0; n < 200; ++n) {
    const std::size_t d = 1 + n % 6;
    const auto I = gen::ideal(rng, d, 4, 5);
    CAPTURE(I);
    CHECK(parse_ideal(render(I), d) == I);
  }
}

TEST_CASE("parse_polytope") {
  const auto P = parse_polytope("(0,0) (1,0), (0,1); (1,1)");
  CHECK(P.vertices().size() == 4);
  CHECK(parse_polytope("(-2, 3)").is_point());
  CHECK_THROWS_AS(parse_polytope(""), ParseError);
  CHECK_THROWS_AS(parse_polytope("(1,2) (1,2,3)"), ParseError);
  CHECK_THROWS_AS(parse_polytope("(1,)"), ParseError);
}

TEST_CASE("JSON documents") {
  const auto doc = nlohmann::json::parse(R"({"vars": 3, "gens": [[1,0,0],["0","2",0],[0,0,1]]})");
  CHECK(ideal_from_document(doc) == ideal({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(ideal_from_document(nlohmann::json::parse(R"({"vars": 2, "gens": []})")), ParseError);
  CHECK_THROWS_AS(ideal_from_document(nlohmann::json::parse(R"({"vars": 2, "gens": [[1]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_document(nlohmann::json::parse(R"({"gens": [[1]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_document(nlohmann::json::parse(R"({"vars": 1, "gens": [[-1]]})")), ParseError);

  const auto out = to_json(ideal({{2, 0}, {0, 1}}));
  CHECK(out["vars"] == "2");
  CHECK(out["gens"] == nlohmann::json::parse(R"([["0","1"],["2","0"]])"));
  CHECK(out["text"] == "x^2, y");
  // What to_json writes, ideal_from_document reads back.
  CHECK(ideal_from_document(out) == ideal({{2, 0}, {0, 1}}));
}
