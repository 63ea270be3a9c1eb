#include "trisect/forms.hpp"
#include "trisect/io.hpp"

#include <doctest.h>

using namespace trisect;

TEST_SUITE("forms") {
  TEST_CASE("named forms") {
    IntMatrix e8 = e8_form();
    CHECK(e8.rows() == 8);
    CHECK(is_symmetric(e8));
    CHECK(is_even(e8));
    CHECK(e8(3, 4) == -1);
    CHECK(e8(4, 7) == -1);
    CHECK(e8(6, 7) == 0);
    CHECK_FALSE(is_even(identity_matrix<BigInt>(1)));
    CHECK(repeat_form(hyperbolic_form(), 3).rows() == 6);
    CHECK(repeat_form(e8, 0).rows() == 0);
  }

  TEST_CASE("shorthand parser") {
    CHECK(parse_form_spec("E8").matrix == e8_form());
    CHECK(parse_form_spec("-E8").matrix == IntMatrix(-e8_form()));
    CHECK(parse_form_spec("H").matrix == hyperbolic_form());
    CHECK(parse_form_spec("1").matrix == identity_matrix<BigInt>(1));
    CHECK(parse_form_spec("-1").matrix == IntMatrix(-identity_matrix<BigInt>(1)));
    CHECK(parse_form_spec("<1>").matrix == identity_matrix<BigInt>(1));
    CHECK(parse_form_spec("2<-1>+E8").matrix.rows() == 10);
    auto big = parse_form_spec("3E8+2H");
    CHECK(big.matrix.rows() == 28);
    CHECK(big.matrix == direct_sum(repeat_form(e8_form(), 3), repeat_form(hyperbolic_form(), 2)));
    CHECK(big.label == "3E8+2H");
    CHECK(parse_form_spec(" 2H ").matrix == repeat_form(hyperbolic_form(), 2));
    CHECK(parse_form_spec("[[0,1],[1,0]]").matrix == hyperbolic_form());
    CHECK(parse_form_spec("12H").matrix.rows() == 24);
  }

  TEST_CASE("shorthand parser errors") {
    for (const char* bad : {"", "E9", "2", "H+", "+H", "[[1,2]", "[[\"1x\"]]", "x"}) {
      try {
        parse_form_spec(bad);
        FAIL("accepted " << bad);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
      }
    }
    CHECK_THROWS_AS(parse_form_spec("[[1],[1,2]]"), Error);
  }
}

TEST_SUITE("io") {
  TEST_CASE("big integers") {
    CHECK(to_json(BigInt(5)) == json(5));
    BigInt huge("123456789012345678901234567890");
    CHECK(to_json(huge) == json("123456789012345678901234567890"));
    CHECK(bigint_from_json(to_json(huge)) == huge);
    CHECK(bigint_from_json(json(-7)) == -7);
    CHECK_THROWS_AS(bigint_from_json(json("1x")), Error);
    CHECK_THROWS_AS(bigint_from_json(json(1.5)), Error);
  }

  TEST_CASE("diagram round trip") {
    auto d = standard_pseudotrisection(e8_form(), 1);
    json j = diagram_to_json(d, "e8-k1", std::string("E8"));
    auto back = diagram_from_json(j);
    CHECK(back.name == "e8-k1");
    CHECK(back.expected_form == std::optional<std::string>("E8"));
    CHECK(back.diagram.alpha() == d.alpha());
    CHECK(back.diagram.beta() == d.beta());
    CHECK(back.diagram.gamma() == d.gamma());
    CHECK(back.diagram.k() == 1);
    CHECK(back.diagram.flags.valid());
  }

  TEST_CASE("diagram schema errors") {
    auto kind = [](const json& j) {
      try {
        diagram_from_json(j);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidDiagram;
    };
    CHECK(kind(json::array()) == ErrorKind::ParseError);
    CHECK(kind(json{{"genus", 1}, {"k", 0}, {"alpha", {{1, 0}}}, {"beta", {{0, 1}}}}) == ErrorKind::ParseError);
    CHECK(kind(json{{"genus", 1}, {"k", 0}, {"alpha", {{1, 0, 0}}}, {"beta", {{0, 1}}}, {"gamma", {{1, 1}}}}) ==
          ErrorKind::DimensionMismatch);
    CHECK(kind(json{{"genus", 2}, {"k", 0}, {"alpha", {{1, 0, 0, 0}, {0, 0, 1, 0}}}, {"beta", {{0, 0, 1, 0}, {0, 0, 0, 1}}},
                    {"gamma", {{1, 0, 0, 0}, {0, 1, 0, 0}}}}) == ErrorKind::NotIsotropic);
    CHECK(kind(json{{"genus", "one"}, {"k", 0}, {"alpha", 1}, {"beta", 1}, {"gamma", 1}}) == ErrorKind::ParseError);
  }

  TEST_CASE("reports") {
    json f = form_to_json(e8_form());
    CHECK(f["rank"] == 8);
    CHECK(f["signature"] == 8);
    CHECK(f["even"] == true);
    CHECK(f["unimodular"] == true);

    SpanCertificate c;
    c.dimension = 4;
    c.num_generators = 6;
    c.factor_summary = {{"1", 4}};
    c.spans_over_z = true;
    json cj = certificate_to_json(c);
    CHECK(cj["spans_over_Z"] == true);
    CHECK(cj["invariant_factors_summary"]["1"] == 4);

    auto r = obstruction_to_json(rohlin_obstruction(e8_form(), "E8"));
    CHECK(r["verdict"] == "Obstructed");
    CHECK(r["mu_sum"] == 1);

    auto l = linking_to_json(linking_form(standard_pseudotrisection(hyperbolic_form(), 0), LinkingKind::L3));
    CHECK(l["which"] == "l3");
    CHECK(l["basis"] == json({"x1", "x2", "y1", "y2"}));
    CHECK(l["q_basis_values"].size() == 4);
    CHECK(basis_label(3, 4) == "y2");
  }
}
