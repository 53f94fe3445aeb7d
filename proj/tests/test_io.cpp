#include <catch2/catch_amalgamated.hpp>

#include "eulersq/io.hpp"
#include "fixtures.hpp"

using namespace eulersq;

TEST_CASE("square text format") {
  Square sq = fixtures::order3_magic()[0];
  CHECK(format_square_text(sq) == "2 9 4\n7 5 3\n6 1 8\n");
  CHECK(parse_square_text(format_square_text(sq)) == sq);

  SECTION("trailing newline is optional") {
    CHECK(parse_square_text("2 9 4\n7 5 3\n6 1 8") == sq);
  }
  SECTION("ragged input is rejected") {
    CHECK_THROWS_AS(parse_square_text("1 2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_square_text("1 2\n3 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_square_text(""), std::invalid_argument);
  }
  SECTION("round trip over generated squares") {
    for (int n : {1, 2, 5, 9}) {
      Square m = simple_march(n);
      CHECK(parse_square_text(format_square_text(m)) == m);
    }
  }
}

TEST_CASE("square json format") {
  Square sq = fixtures::order3_magic()[0];
  nlohmann::json j = square_to_json(sq);
  CHECK(j["order"] == 3);
  CHECK(j["cells"][0] == nlohmann::json({2, 9, 4}));
  CHECK(square_from_json(j) == sq);

  SECTION("field names are fixed") {
    CHECK_THROWS_AS(square_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
  }
  SECTION("order must match the cells") {
    nlohmann::json bad = square_to_json(sq);
    bad["order"] = 4;
    CHECK_THROWS_AS(square_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("graeco formats") {
  GraecoLatinSquare g{fixtures::order4_pair_base(), fixtures::order4_pair_exponent()};
  SECTION("text tokens are base.exponent") {
    std::string text = format_graeco_text(g);
    CHECK(text.substr(0, text.find('\n')) == "1.1 2.4 3.2 4.3");
    CHECK(parse_graeco_text(text) == g);
    CHECK_THROWS_AS(parse_graeco_text("1.1 2\n1.1 2.2\n"), std::invalid_argument);
  }
  SECTION("json cells are [base, exponent] pairs") {
    nlohmann::json j = graeco_to_json(g);
    CHECK(j["order"] == 4);
    CHECK(j["cells"][0][0] == nlohmann::json({1, 1}));
    CHECK(j["cells"][0][1] == nlohmann::json({2, 4}));
    CHECK(graeco_from_json(j) == g);
  }
}

TEST_CASE("directrix lines") {
  Directrix d{5, {1, 3, 5, 2, 4}};
  CHECK(format_directrix(d) == "1 3 5 2 4");
  CHECK(parse_directrix("1 3 5 2 4") == d);
  CHECK_THROWS_AS(parse_directrix("2 3 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_directrix("1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_directrix(""), std::invalid_argument);
}

TEST_CASE("constraint lines") {
  SECTION("parse") {
    LinearConstraint eq = parse_constraint("2c = a + b", 3);
    CHECK(eq.alphabet == Alphabet::latin);
    CHECK(eq.coeffs == std::vector<int>{1, 1, -2});

    LinearConstraint greek = parse_constraint("2C = A + B", 3);
    CHECK(greek.alphabet == Alphabet::greek);
    CHECK(greek.coeffs == std::vector<int>{1, 1, -2});

    LinearConstraint paired = parse_constraint("a + d = b + c", 4);
    CHECK(paired.coeffs == std::vector<int>{1, -1, -1, 1});
  }
  SECTION("format/parse round trip") {
    LinearConstraint eq{Alphabet::latin, {1, 1, -2}};
    CHECK(parse_constraint(format_constraint(eq), 3) == eq);
  }
  SECTION("mixed alphabets are rejected") {
    CHECK_THROWS_AS(parse_constraint("a = B", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_constraint("a + b", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_constraint("a = z", 3), std::invalid_argument);
  }
}

TEST_CASE("letter schema text") {
  LetterSchema schema;
  schema.latin = Square::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  schema.greek = Square::from_rows({{3, 2, 1}, {1, 3, 2}, {2, 1, 3}});
  schema.constraints = {{Alphabet::latin, {1, 1, -2}}, {Alphabet::greek, {1, 1, -2}}};

  std::string text = format_letter_schema(schema);
  CHECK(text == "aC bB cA\nbA cC aB\ncB aA bC\na + b = 2c\nA + B = 2C\n");

  LetterSchema parsed = parse_letter_schema(text);
  CHECK(parsed.latin == schema.latin);
  CHECK(parsed.greek == schema.greek);
  REQUIRE(parsed.constraints.size() == 2);
  CHECK(parsed.constraints[0] == schema.constraints[0]);
  CHECK(parsed.constraints[1] == schema.constraints[1]);

  CHECK_THROWS_AS(parse_letter_schema("aA bB\ncC"), std::invalid_argument);
  CHECK_THROWS_AS(parse_letter_schema("aA zZ\naA bB"), std::invalid_argument);
}
