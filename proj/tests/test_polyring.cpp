#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stci/field.hpp"
#include "stci/polynomial.hpp"
#include "stci/ring.hpp"

using namespace stci;

namespace {

RingPtr ring3(MonomialOrder ord = MonomialOrder::degrevlex()) {
  return make_ring(VariableSet::numbered(3), ord);
}

template <class F>
Polynomial<typename F::Elem> random_poly(std::mt19937& rng, const RingPtr& r,
                                         const F& field, int max_terms = 5,
                                         std::uint32_t max_exp = 3) {
  using K = typename F::Elem;
  std::uniform_int_distribution<int> tdist(0, max_terms);
  std::uniform_int_distribution<int> cdist(-4, 4);
  std::uniform_int_distribution<std::uint32_t> edist(0, max_exp);
  std::vector<typename Polynomial<K>::Term> terms;
  const int nt = tdist(rng);
  for (int t = 0; t < nt; ++t) {
    std::vector<std::uint32_t> e(r->nvars());
    for (auto& x : e) x = edist(rng);
    terms.push_back({Monomial(std::move(e)), field.from_int(cdist(rng))});
  }
  return Polynomial<K>::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("variable sets reject duplicates", "[ring]") {
  CHECK_THROWS_AS(VariableSet(std::vector<std::string>{"X1", "X1"}), domain_error);
  CHECK_THROWS_AS(VariableSet(std::vector<std::string>{}), domain_error);
  VariableSet vs = VariableSet::numbered(4, "T");
  CHECK(vs.names == std::vector<std::string>{"T1", "T2", "T3", "T4"});
  CHECK(vs.index_of("T3") == 2);
  CHECK(vs.index_of("T9") == -1);
}

TEST_CASE("monomial arithmetic", "[ring]") {
  Monomial a({1, 0, 2});
  Monomial b({0, 3, 1});
  CHECK((a * b) == Monomial({1, 3, 3}));
  CHECK(a.degree() == 3);
  CHECK_FALSE(a.divides(b));
  CHECK(a.divides(a * b));
  CHECK(a.divide_into(a * b) == b);
  CHECK_THROWS_AS(b.divide_into(a), domain_error);
  CHECK(lcm(a, b) == Monomial({1, 3, 2}));
  CHECK(coprime(Monomial({1, 0, 0}), Monomial({0, 2, 1})));
  CHECK_FALSE(coprime(a, b));
  CHECK(a.support() == std::vector<std::size_t>{0, 2});
  CHECK_THROWS_AS(a * Monomial({1, 1}), context_error);
}

TEST_CASE("monomial exponent overflow is checked", "[ring]") {
  Monomial big(std::vector<std::uint32_t>{4000000000u});
  CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("degrevlex order", "[ring]") {
  MonomialOrder ord = MonomialOrder::degrevlex();
  // degree dominates
  CHECK(ord.less(Monomial({1, 0, 0}), Monomial({1, 1, 0})));
  // same degree: X2^2 above X1*X3
  CHECK(ord.less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  CHECK(ord.compare(Monomial({0, 2, 0}), Monomial({0, 2, 0})) == 0);
  // 1 is minimal
  CHECK(ord.less(Monomial({0, 0, 0}), Monomial({0, 0, 1})));
}

TEST_CASE("lex order", "[ring]") {
  MonomialOrder ord = MonomialOrder::lex();
  CHECK(ord.less(Monomial({0, 5, 5}), Monomial({1, 0, 0})));
  CHECK(ord.less(Monomial({1, 0, 1}), Monomial({1, 1, 0})));
}

TEST_CASE("elimination order ranks block variables first", "[ring]") {
  MonomialOrder ord = MonomialOrder::elimination({0});
  // any monomial touching X1 is above every X1-free monomial
  CHECK(ord.less(Monomial({0, 9, 9}), Monomial({1, 0, 0})));
  // block-free ties fall back to degrevlex
  CHECK(ord.less(Monomial({0, 0, 1}), Monomial({0, 1, 0})));
}

TEST_CASE("rational field helpers", "[field]") {
  RationalField Q;
  CHECK(Q.from_fraction(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Q.from_fraction(1, 0), domain_error);
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(inverse(Rational(2, 3)) == Rational(3, 2));
  CHECK_THROWS_AS(inverse(Rational(0)), domain_error);
}

TEST_CASE("prime field arithmetic", "[field]") {
  PrimeFieldSpec gf(7);
  Fp a = gf.from_int(3), b = gf.from_int(5);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 4);
  CHECK((a * inverse(a)).value() == 1);
  CHECK(gf.from_int(-1).value() == 6);
  CHECK(gf.from_fraction(1, 2).value() == 4);
  CHECK_THROWS_AS(gf.from_fraction(1, 7), domain_error);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), context_error);
}

TEST_CASE("modulus must be prime and small", "[field]") {
  CHECK_THROWS_AS(PrimeFieldSpec(1), domain_error);
  CHECK_THROWS_AS(PrimeFieldSpec(6), domain_error);
  CHECK_THROWS_AS(PrimeFieldSpec(std::int64_t(1) << 32), domain_error);
  CHECK(PrimeFieldSpec(32003).name() == "GF(32003)");
}

TEST_CASE("parse and print round trip", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  for (const char* s : {"X3", "X1*X3 - X2^2", "X1^4 + 2*X2*X3 - 5",
                        "1/2*X1 - 3/4", "-X1 + X2"}) {
    Polynomial<Rational> f = parse_polynomial(s, r, Q);
    CHECK(parse_polynomial(to_string(f), r, Q) == f);
  }
  CHECK(canonical_string(parse_polynomial("-X2^2 + X1*X3", r, Q)) ==
        "X1*X3 - X2^2");
  CHECK(to_string(Polynomial<Rational>::zero(r)) == "0");
}

TEST_CASE("parser rejects malformed input", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  CHECK_THROWS_AS(parse_polynomial("X9", r, Q), parse_error);
  CHECK_THROWS_AS(parse_polynomial("X1 +", r, Q), parse_error);
  CHECK_THROWS_AS(parse_polynomial("X1 X2", r, Q), parse_error);
  CHECK_THROWS_AS(parse_polynomial("3/", r, Q), parse_error);
}

TEST_CASE("terms stay sorted, merged and zero-free", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  using P = Polynomial<Rational>;
  std::vector<P::Term> raw = {{Monomial({0, 0, 1}), Rational(1)},
                              {Monomial({2, 0, 0}), Rational(3)},
                              {Monomial({0, 0, 1}), Rational(-1)},
                              {Monomial({1, 1, 0}), Rational(0)}};
  P f = P::from_terms(r, raw);
  REQUIRE(f.term_count() == 1);
  CHECK(f.leading_monomial() == Monomial({2, 0, 0}));
  // normalization is idempotent
  P g = P::from_terms(r, {f.terms().begin(), f.terms().end()});
  CHECK(g == f);
}

TEST_CASE("ring axioms on random polynomials", "[polynomial][property]") {
  RingPtr r = ring3();
  RationalField Q;
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    auto f = random_poly(rng, r, Q);
    auto g = random_poly(rng, r, Q);
    auto h = random_poly(rng, r, Q);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Polynomial<Rational>::zero(r));
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[polynomial][property]") {
  RingPtr r = ring3();
  PrimeFieldSpec gf(7);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> vdist(0, 6);
  for (int it = 0; it < 40; ++it) {
    auto f = random_poly(rng, r, gf);
    auto g = random_poly(rng, r, gf);
    std::vector<Fp> pt = {gf.from_int(vdist(rng)), gf.from_int(vdist(rng)),
                          gf.from_int(vdist(rng))};
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
  }
}

TEST_CASE("pow agrees with repeated multiplication", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  Polynomial<Rational> f = parse_polynomial("X1 + X2", r, Q);
  CHECK(f.pow(0) == Polynomial<Rational>::constant(r, Rational(1)));
  CHECK(f.pow(3) == f * f * f);
  Polynomial<Rational> z = Polynomial<Rational>::zero(r);
  CHECK(z.pow(4).is_zero_poly());
  PrimeFieldSpec gf(5);
  Polynomial<Fp> zf = Polynomial<Fp>::zero(r);
  CHECK(zf.pow(2).is_zero_poly());
}

TEST_CASE("leading term access requires a nonzero polynomial", "[polynomial]") {
  RingPtr r = ring3();
  Polynomial<Rational> z = Polynomial<Rational>::zero(r);
  CHECK_THROWS_AS(z.leading_monomial(), domain_error);
  CHECK_THROWS_AS(z.leading_coefficient(), domain_error);
  CHECK_THROWS_AS(z.monic(), domain_error);
}

TEST_CASE("mixed ring contexts are rejected", "[polynomial]") {
  RationalField Q;
  RingPtr a = ring3();
  RingPtr b = make_ring(VariableSet::numbered(4));
  Polynomial<Rational> f = parse_polynomial("X1", a, Q);
  Polynomial<Rational> g = parse_polynomial("X1", b, Q);
  CHECK_THROWS_AS(f + g, context_error);
  CHECK_THROWS_AS(f * g, context_error);
  CHECK_THROWS_AS(f.evaluate({Rational(1)}), context_error);
  // same content, different object: compatible
  RingPtr a2 = ring3();
  CHECK(f + parse_polynomial("X1", a2, Q) ==
        parse_polynomial("2*X1", a, Q));
}

TEST_CASE("order transport preserves the polynomial", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  Polynomial<Rational> f = parse_polynomial("X1*X3 - X2^2", r, Q);
  Polynomial<Rational> fl = with_order(f, MonomialOrder::lex());
  CHECK(fl.leading_monomial() == Monomial({1, 0, 1}));
  CHECK(f.leading_monomial() == Monomial({0, 2, 0}));
  CHECK(to_string(fl) == "X1*X3 - X2^2");
  CHECK(with_order(fl, MonomialOrder::degrevlex()) == f);
}

TEST_CASE("extend_to_ring embeds into a larger variable set", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  RingPtr big = make_ring(VariableSet({"X1", "X2", "X3", "t"}));
  Polynomial<Rational> f = parse_polynomial("X1*X3 - X2^2", r, Q);
  Polynomial<Rational> g = extend_to_ring(f, big);
  CHECK(g.ring() == big);
  CHECK(canonical_string(g) == "X1*X3 - X2^2");
  CHECK_THROWS_AS(extend_to_ring(g, r), context_error);
}

TEST_CASE("reduction to a prime field", "[polynomial]") {
  RingPtr r = ring3();
  RationalField Q;
  PrimeFieldSpec gf(2);
  Polynomial<Rational> f = parse_polynomial("2*X1 + X2", r, Q);
  Polynomial<Fp> g = to_prime_field(f, gf);
  CHECK(to_string(g) == "X2");
  CHECK(to_prime_field(parse_polynomial("2*X1", r, Q), gf).is_zero_poly());
  CHECK_THROWS_AS(to_prime_field(parse_polynomial("1/2*X1", r, Q), gf),
                  domain_error);
}
