#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include <json.hpp>

#include "stci/fixtures.hpp"
#include "stci/schmitt_vogel.hpp"
#include "stci/scroll.hpp"

using namespace stci;

namespace {

RingPtr ring(std::size_t n) { return make_ring(VariableSet::numbered(n)); }

Polynomial<Rational> qp(const std::string& s, const RingPtr& r) {
  RationalField Q;
  return parse_polynomial(s, r, Q);
}

}  // namespace

TEST_CASE("layer shape validation", "[sv]") {
  RingPtr r = ring(3);
  using L = std::vector<std::vector<Polynomial<Rational>>>;
  CHECK_THROWS_AS(SVSystem<Rational>(r, L{}), domain_error);
  // P_0 must be a singleton
  CHECK_THROWS_AS(SVSystem<Rational>(r, L{{qp("X1", r), qp("X2", r)}}),
                  domain_error);
  // layers must be disjoint
  CHECK_THROWS_AS(SVSystem<Rational>(r, L{{qp("X1", r)}, {qp("X1", r)}}),
                  domain_error);
  // no zero elements
  CHECK_THROWS_AS(
      SVSystem<Rational>(r, L{{Polynomial<Rational>::zero(r)}}),
      domain_error);
  // exponent table must match the layer shape and be positive
  CHECK_THROWS_AS(SVSystem<Rational>(r, L{{qp("X1", r)}}, {{1, 1}}),
                  domain_error);
  CHECK_THROWS_AS(SVSystem<Rational>(r, L{{qp("X1", r)}}, {{0}}),
                  domain_error);
  SVSystem<Rational> ok(r, L{{qp("X1", r)}, {qp("X2", r), qp("X3", r)}});
  CHECK(ok.exponents == std::vector<std::vector<std::uint32_t>>{{1}, {1, 1}});
  CHECK(ok.all_elements().size() == 3);
}

TEST_CASE("conditions hold on the worked partition", "[sv]") {
  SVSystem<Rational> S(fixtures::ex1_matrix().ring,
                       sv_partition(fixtures::ex1_matrix()));
  VerificationReport rep = verify_conditions(S);
  CHECK(rep.verdict == Verdict::True);
  // every monomial pair has a closed-form witness at the first power
  for (const auto& e : rep.per_generator) {
    REQUIRE(e.power.has_value());
    CHECK(*e.power == 1);
  }
  CHECK(rep.per_generator.size() == 1 + 3);  // C(2,2) pairs in P_1, C(3,2) in P_2
}

TEST_CASE("a pair without a witness is a definite failure", "[sv]") {
  RingPtr r = ring(3);
  SVSystem<Rational> S(r, {{qp("X1", r)}, {qp("X2", r), qp("X3", r)}});
  // (X2*X3)^m never lies in (X1): monomial support check is conclusive
  VerificationReport rep = verify_conditions(S);
  CHECK(rep.verdict == Verdict::False);
  CHECK(rep.per_generator.front().result == "no witness");
}

TEST_CASE("exhausted search on general polynomials is inconclusive", "[sv]") {
  RingPtr r = ring(2);
  SVSystem<Rational> S(r, {{qp("X1 + X2", r)}, {qp("X1", r), qp("X2", r)}});
  VerificationReport rep = verify_conditions(S, 4);
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("general-polynomial witnesses are found by power search", "[sv]") {
  RingPtr r = ring(3);
  // the binomial member forces the division-based search instead of the
  // monomial closed form
  SVSystem<Rational> S(
      r, {{qp("X1^2", r)}, {qp("X1*X3", r), qp("X1*X2 + X1*X3", r)}});
  VerificationReport rep = verify_conditions(S);
  CHECK(rep.verdict == Verdict::True);
  REQUIRE(rep.per_generator.front().power.has_value());
  CHECK(*rep.per_generator.front().power == 1);
}

TEST_CASE("layer sums", "[sv]") {
  SVSystem<Rational> S(fixtures::ex1_matrix().ring,
                       sv_partition(fixtures::ex1_matrix()));
  std::vector<Polynomial<Rational>> qs = build_sums(S);
  REQUIRE(qs.size() == 3);
  CHECK(canonical_string(qs[0]) == "X1*X11");
  CHECK(canonical_string(qs[1]) == "X1*X8 + X3*X11");
  CHECK(canonical_string(qs[2]) == "X1*X5 + X3*X8 + X5*X11");
}

TEST_CASE("per-element exponents enter the sums", "[sv]") {
  RingPtr r = ring(2);
  SVSystem<Rational> S(r, {{qp("X1", r)}, {qp("X2", r)}}, {{2}, {3}});
  std::vector<Polynomial<Rational>> qs = build_sums(S);
  CHECK(canonical_string(qs[0]) == "X1^2");
  CHECK(canonical_string(qs[1]) == "X2^3");
  CHECK(check_radical_claim(S).verdict == Verdict::True);
}

TEST_CASE("radical claim certified on the worked partition", "[sv]") {
  SVSystem<Rational> S(fixtures::ex1_matrix().ring,
                       sv_partition(fixtures::ex1_matrix()));
  VerificationReport rep = check_radical_claim(S);
  CHECK(rep.verdict == Verdict::True);
  CHECK(rep.claim == "sqrt(P) == sqrt(q_0..q_r)");
}

TEST_CASE("radical claim can fail for bad layer choices", "[sv]") {
  RingPtr r = ring(3);
  // grouping independent variables into one layer loses X2 and X3
  SVSystem<Rational> S(r, {{qp("X1", r)}, {qp("X2", r), qp("X3", r)}});
  CHECK(check_radical_claim(S).verdict == Verdict::False);
}

TEST_CASE("prime-field systems run the same machinery", "[sv]") {
  PrimeFieldSpec gf(5);
  RingPtr r = ring(3);
  auto fp = [&](const std::string& s) { return parse_polynomial(s, r, gf); };
  SVSystem<Fp> S(r, {{fp("X1*X3")}, {fp("X1*X2"), fp("X2*X3")}});
  CHECK(verify_conditions(S).verdict == Verdict::True);
  CHECK(check_radical_claim(S).verdict == Verdict::True);
}

TEST_CASE("system file parsing", "[sv]") {
  std::ifstream in(std::string(STCI_FIXTURE_DIR) + "/sv_ex3.json");
  REQUIRE(in.good());
  RationalField Q;
  SVSystem<Rational> S =
      sv_system_from_json(nlohmann::json::parse(in), Q);
  CHECK(S.layers.size() == 3);
  CHECK(verify_conditions(S).verdict == Verdict::True);
  nlohmann::json bad{{"variables", {"X1"}}};
  CHECK_THROWS_AS(sv_system_from_json(bad, Q), parse_error);
  nlohmann::json withexp{{"variables", {"X1", "X2"}},
                         {"layers", {{"X1"}, {"X2"}}},
                         {"exponents", {{"X2", 3}}}};
  SVSystem<Rational> E = sv_system_from_json(withexp, Q);
  CHECK(E.exponents == std::vector<std::vector<std::uint32_t>>{{1}, {3}});
}

TEST_CASE("conditions imply the radical claim on random partitions",
          "[sv][property]") {
  std::mt19937 rng(99);
  int ran = 0;
  for (int it = 0; it < 40 && ran < 12; ++it) {
    BarredMatrix M = fixtures::random_simple_matrix(rng);
    if (M.ring->nvars() > 7) continue;
    SVSystem<Rational> S(M.ring, sv_partition(M));
    VerificationReport cond = verify_conditions(S);
    REQUIRE(cond.verdict == Verdict::True);
    CHECK(check_radical_claim(S).verdict == Verdict::True);
    ++ran;
  }
  CHECK(ran > 0);
}
