#ifndef STCI_FIXTURES_HPP_
#define STCI_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "stci/monomial_curve.hpp"
#include "stci/polynomial.hpp"
#include "stci/scroll.hpp"

namespace stci {
namespace fixtures {

// ---------------------------------------------------------------------------
// The worked examples, as code.  JSON copies of the matrices ship under
// fixtures/ for the file-based interface.

// 11-variable matrix with big blocks (X1;X2), (X3 X4;X4 X5), (X5 X6 X7;X6 X7 X8),
// (X9 X10;X10 X11); X5 is a shared corner.
inline BarredMatrix ex1_matrix(MonomialOrder order = MonomialOrder::degrevlex()) {
  BarredMatrix M{make_ring(VariableSet::numbered(11), std::move(order)), {}};
  M.big_blocks = {BigBlock{{SmallBlock{{0, 1}}}},
                  BigBlock{{SmallBlock{{2, 3, 4}}}},
                  BigBlock{{SmallBlock{{4, 5, 6, 7}}}},
                  BigBlock{{SmallBlock{{8, 9, 10}}}}};
  return M;
}

// the 28 generators of the associated ideal, as canonical strings
inline std::vector<std::string> ex2_generator_strings() {
  return {
      // minors, in (block, j, j') order
      "X3*X5 - X4^2",
      "X5*X7 - X6^2", "X5*X8 - X6*X7", "X6*X8 - X7^2",
      "X9*X11 - X10^2",
      // cross products
      "X1*X4", "X1*X5",
      "X1*X6", "X1*X7", "X1*X8",
      "X1*X10", "X1*X11",
      "X3*X6", "X3*X7", "X3*X8", "X4*X6", "X4*X7", "X4*X8",
      "X3*X10", "X3*X11", "X4*X10", "X4*X11",
      "X5*X10", "X5*X11", "X6*X10", "X6*X11", "X7*X10", "X7*X11"};
}

// the seven equations the ideal is an s.t.c.i. on
inline std::vector<std::string> ex3_system_strings() {
  return {"X3*X5 - X4^2",
          "X5*X7 - X6^2",
          "X5*X8^2 - 2*X6*X7*X8 + X7^3",
          "X9*X11 - X10^2",
          "X1*X5 + X3*X8 + X5*X11",
          "X1*X8 + X3*X11",
          "X1*X11"};
}

// T-matrix of the fiber-cone example: (T1;T2), (T3 T4;T4 T5), (T5;T6)
inline BarredMatrix ex4_matrix(MonomialOrder order = MonomialOrder::degrevlex()) {
  BarredMatrix M{make_ring(VariableSet::numbered(6, "T"), std::move(order)), {}};
  M.big_blocks = {BigBlock{{SmallBlock{{0, 1}}}},
                  BigBlock{{SmallBlock{{2, 3, 4}}}},
                  BigBlock{{SmallBlock{{4, 5}}}}};
  return M;
}

// generalized matrix with two small blocks in the first big block
inline BarredMatrix ex4prime_matrix(MonomialOrder order = MonomialOrder::degrevlex()) {
  BarredMatrix M{make_ring(VariableSet::numbered(5), std::move(order)), {}};
  M.big_blocks = {BigBlock{{SmallBlock{{0, 1}}, SmallBlock{{2, 3}}}},
                  BigBlock{{SmallBlock{{3, 4}}}}};
  return M;
}

// the two hand-built equations for the generalized matrix above
inline IdealGens<Rational> ex4prime_system(const RingPtr& ring) {
  RationalField Q;
  return IdealGens<Rational>(
      ring,
      {parse_polynomial("X1*X2*X4 - X2^2*X3 + X1*X5", ring, Q),
       parse_polynomial("X1*X4^2 - X2*X3*X4 + X3*X5", ring, Q)},
      "P1,P2");
}

// generalized matrix whose ideal is not an s.t.c.i.; five equations still
// define its variety
inline BarredMatrix ex5_matrix(MonomialOrder order = MonomialOrder::degrevlex()) {
  BarredMatrix M{make_ring(VariableSet::numbered(7), std::move(order)), {}};
  M.big_blocks = {
      BigBlock{{SmallBlock{{0, 1}}, SmallBlock{{2, 3}}, SmallBlock{{4, 5}}}},
      BigBlock{{SmallBlock{{5, 6}}}}};
  return M;
}

inline IdealGens<Rational> ex5_system(const RingPtr& ring) {
  RationalField Q;
  return IdealGens<Rational>(ring,
                             {parse_polynomial("X1*X4 - X2*X3", ring, Q),
                              parse_polynomial("X3*X6 - X4*X5", ring, Q),
                              parse_polynomial("X1*X6 - X2*X5 + X3*X7", ring, Q),
                              parse_polynomial("X1*X7", ring, Q),
                              parse_polynomial("X5*X7", ring, Q)},
                             "five-equations");
}

// one scroll block of width c (a rational normal curve)
inline BarredMatrix single_scroll_matrix(std::size_t c,
                                         MonomialOrder order = MonomialOrder::degrevlex()) {
  if (c < 1) throw domain_error("scroll width must be >= 1");
  BarredMatrix M{make_ring(VariableSet::numbered(c + 1), std::move(order)), {}};
  std::vector<std::size_t> chain(c + 1);
  for (std::size_t i = 0; i <= c; ++i) chain[i] = i;
  M.big_blocks = {BigBlock{{SmallBlock{std::move(chain)}}}};
  return M;
}

// projective monomial curve x1=u1^534, x2=u2^534, y1=u1^245 u2^289,
// y2=u1^144 u2^390
inline MonomialParametrization ex4_curve() {
  return MonomialParametrization(
      {"x1", "x2", "y1", "y2"}, {"u1", "u2"},
      {{534, 0}, {0, 534}, {245, 289}, {144, 390}});
}

inline std::vector<std::string> ex4_curve_binomial_strings() {
  return {"y1^42 - x1^19*x2^22*y2", "y1^12*x2^3 - x1^2*y2^13",
          "y1^30*y2^12 - x1^17*x2^25", "y1^18*y2^25 - x1^15*x2^28",
          "y1^6*y2^38 - x1^13*x2^31", "y2^51 - y1^6*x1^11*x2^34"};
}

// ---------------------------------------------------------------------------
// Seeded random simple barred matrices for the property suites.

struct RandomMatrixParams {
  std::size_t min_blocks = 2;
  std::size_t max_blocks = 4;
  std::size_t max_width = 3;
};

inline BarredMatrix random_simple_matrix(std::mt19937& rng,
                                         const RandomMatrixParams& params = {},
                                         MonomialOrder order = MonomialOrder::degrevlex()) {
  std::uniform_int_distribution<std::size_t> rdist(params.min_blocks, params.max_blocks);
  std::uniform_int_distribution<std::size_t> cdist(1, params.max_width);
  std::bernoulli_distribution share(0.5);

  const std::size_t r = rdist(rng);
  std::vector<std::vector<std::size_t>> chains;
  std::size_t next = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = cdist(rng);
    std::vector<std::size_t> chain;
    if (i > 0 && share(rng))
      chain.push_back(chains.back().back());  // shared corner with previous block
    while (chain.size() < c + 1) chain.push_back(next++);
    chains.push_back(std::move(chain));
  }

  BarredMatrix M{make_ring(VariableSet::numbered(next), std::move(order)), {}};
  for (auto& chain : chains) M.big_blocks.push_back(BigBlock{{SmallBlock{std::move(chain)}}});
  return M;
}

}  // namespace fixtures
}  // namespace stci

#endif
