#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include <json.hpp>

#include "stci/fixtures.hpp"
#include "stci/monomial_curve.hpp"

using namespace stci;

TEST_CASE("parametrization shape validation", "[toric]") {
  using M = std::vector<std::vector<mpz_class>>;
  CHECK_THROWS_AS(
      MonomialParametrization({"x1", "x2"}, {"u"}, M{{1}}), domain_error);
  CHECK_THROWS_AS(
      MonomialParametrization({"x1"}, {"u", "v"}, M{{1}}), domain_error);
  CHECK_THROWS_AS(
      MonomialParametrization({"x1"}, {"u"}, M{{-1}}), domain_error);
  CHECK_THROWS_AS(
      MonomialParametrization({"x1"}, {"u"}, M{{0}}), domain_error);
  MonomialParametrization P({"x1", "y1"}, {"u", "v"}, M{{2, 0}, {1, 1}});
  CHECK(P.coordinate_index("y1") == 1);
  CHECK(P.coordinate_index("z") == -1);
}

TEST_CASE("binomial parsing", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  CurveBinomial b = parse_binomial("y1^42 - x1^19*x2^22*y2", P);
  CHECK(b.plus == std::vector<mpz_class>{0, 0, 42, 0});
  CHECK(b.minus == std::vector<mpz_class>{19, 22, 0, 1});
  // repeated factors accumulate
  CurveBinomial c = parse_binomial("x1*x1^2 - y1^3", P);
  CHECK(c.plus[0] == 3);

  CHECK_THROWS_AS(parse_binomial("z^2 - x1", P), parse_error);
  CHECK_THROWS_AS(parse_binomial("x1^2", P), parse_error);
  CHECK_THROWS_AS(parse_binomial("x1 - x2 - y1", P), parse_error);
  CHECK_THROWS_AS(parse_binomial("x1 + x2", P), parse_error);
}

TEST_CASE("membership by exponent arithmetic", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  // 245*42 == 534*19 + 144 and 289*42 == 534*22 + 390
  CurveBinomial p1 = parse_binomial("y1^42 - x1^19*x2^22*y2", P);
  CHECK(binomial_in_toric(P, p1));
  CHECK(homogeneity_check(P, p1));
  // wrong coefficient misses in the first parameter
  CurveBinomial bad = parse_binomial("y1^42 - x1^20*x2^22*y2", P);
  CHECK_FALSE(binomial_in_toric(P, bad));
}

TEST_CASE("all six curve binomials pass", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  for (const std::string& s : fixtures::ex4_curve_binomial_strings()) {
    CurveBinomial b = parse_binomial(s, P);
    CHECK(binomial_in_toric(P, b));
    CHECK(homogeneity_check(P, b));
  }
}

TEST_CASE("homogeneous does not imply toric membership", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  // deg(y1) = deg(y2) = 534 in total but the per-parameter degrees differ
  CurveBinomial b = parse_binomial("y1 - y2", P);
  CHECK(homogeneity_check(P, b));
  CHECK_FALSE(binomial_in_toric(P, b));
}

TEST_CASE("side swap does not change the verdicts", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  for (const std::string& s : fixtures::ex4_curve_binomial_strings()) {
    CurveBinomial b = parse_binomial(s, P);
    CurveBinomial swapped{b.minus, b.plus};
    CHECK(binomial_in_toric(P, b) == binomial_in_toric(P, swapped));
    CHECK(homogeneity_check(P, b) == homogeneity_check(P, swapped));
  }
}

TEST_CASE("dimension mismatch is rejected", "[toric]") {
  MonomialParametrization P = fixtures::ex4_curve();
  CurveBinomial b{{1, 0}, {0, 1}};
  CHECK_THROWS_AS(binomial_in_toric(P, b), context_error);
  CHECK_THROWS_AS(homogeneity_check(P, b), context_error);
}

TEST_CASE("exponents beyond 64 bits", "[toric]") {
  MonomialParametrization P(
      {"x", "y"}, {"u"},
      {{mpz_class("100000000000000000000")}, {mpz_class("1")}});
  CurveBinomial b = parse_binomial("x - y^100000000000000000000", P);
  CHECK(binomial_in_toric(P, b));
}

TEST_CASE("curve fixture file", "[toric]") {
  std::ifstream in(std::string(STCI_FIXTURE_DIR) + "/ex4_curve.json");
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  MonomialParametrization P = parametrization_from_json(j);
  CHECK(P.coordinates == fixtures::ex4_curve().coordinates);
  CHECK(P.exponent_matrix == fixtures::ex4_curve().exponent_matrix);
  REQUIRE(j.at("binomials").size() == 6);
  for (const auto& s : j.at("binomials")) {
    CurveBinomial b = parse_binomial(s.get<std::string>(), P);
    CHECK(binomial_in_toric(P, b));
    CHECK(homogeneity_check(P, b));
  }
}

TEST_CASE("string exponents in fixture files", "[toric]") {
  nlohmann::json j{{"coordinates", {"x"}},
                   {"parameters", {"u"}},
                   {"exponent_matrix", {{"123456789012345678901234567890"}}}};
  MonomialParametrization P = parametrization_from_json(j);
  CHECK(P.exponent_matrix[0][0] ==
        mpz_class("123456789012345678901234567890"));
}
