#ifndef STCI_SCROLL_HPP_
#define STCI_SCROLL_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stci/errors.hpp"
#include "stci/field.hpp"
#include "stci/groebner.hpp"
#include "stci/polynomial.hpp"
#include "stci/report.hpp"
#include "stci/ring.hpp"

namespace stci {

// Exact C(n, k); k > n is a domain error rather than 0.
inline mpz_class binomial_coefficient(unsigned long n, unsigned long k) {
  if (k > n) throw domain_error("binomial_coefficient requires k <= n");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------
// A small block is a scroll matrix: a variable chain e_1..e_{c+1} read as the
// 2 x c matrix with columns (e_j, e_{j+1}).

struct SmallBlock {
  std::vector<std::size_t> entries;  // chain, length = width + 1

  std::size_t width() const { return entries.size() - 1; }
  std::vector<std::size_t> top_row() const {
    return {entries.begin(), entries.end() - 1};
  }
  std::vector<std::size_t> bottom_row() const {
    return {entries.begin() + 1, entries.end()};
  }
};

struct BigBlock {
  std::vector<SmallBlock> small_blocks;

  std::size_t width() const {
    std::size_t c = 0;
    for (const auto& s : small_blocks) c += s.width();
    return c;
  }
  std::vector<std::size_t> top_row() const {
    std::vector<std::size_t> r;
    for (const auto& s : small_blocks)
      for (std::size_t v : s.top_row()) r.push_back(v);
    return r;
  }
  std::vector<std::size_t> bottom_row() const {
    std::vector<std::size_t> r;
    for (const auto& s : small_blocks)
      for (std::size_t v : s.bottom_row()) r.push_back(v);
    return r;
  }
  std::set<std::size_t> entry_set() const {
    std::set<std::size_t> e;
    for (const auto& s : small_blocks) e.insert(s.entries.begin(), s.entries.end());
    return e;
  }
  std::size_t first_top() const { return small_blocks.front().entries.front(); }
  std::size_t last_bottom() const { return small_blocks.back().entries.back(); }
};

struct BarredMatrix {
  RingPtr ring;
  std::vector<BigBlock> big_blocks;

  std::size_t block_count() const { return big_blocks.size(); }
  bool simple() const {
    for (const auto& b : big_blocks)
      if (b.small_blocks.size() != 1) return false;
    return true;
  }
  std::size_t total_width() const {
    std::size_t c = 0;
    for (const auto& b : big_blocks) c += b.width();
    return c;
  }
  std::string var_name(std::size_t idx) const { return ring->vars.names[idx]; }
};

// ---------------------------------------------------------------------------
// Validation: structural invariants plus the variable-sharing rule (the only
// coincidence allowed across big blocks is one lower-right corner reused as a
// later block's upper-left corner, at most once per block).

inline VerificationReport validate(const BarredMatrix& M) {
  VerificationReport rep;
  rep.claim = "barred-matrix-valid";
  rep.order = M.ring ? M.ring->order.name() : "";
  rep.verdict = Verdict::True;

  auto fail = [&](const std::string& what) {
    rep.verdict = Verdict::False;
    rep.per_generator.push_back({what, "violation", std::nullopt});
  };

  if (M.big_blocks.empty()) {
    fail("matrix has no big blocks");
    return rep;
  }
  const std::size_t n = M.ring->nvars();
  for (std::size_t b = 0; b < M.big_blocks.size(); ++b) {
    const BigBlock& B = M.big_blocks[b];
    if (B.small_blocks.empty()) {
      fail("big block " + std::to_string(b + 1) + " has no small blocks");
      return rep;
    }
    for (const SmallBlock& S : B.small_blocks) {
      if (S.entries.size() < 2) {
        fail("small block in big block " + std::to_string(b + 1) +
             " has width < 1");
        return rep;
      }
      std::set<std::size_t> uniq(S.entries.begin(), S.entries.end());
      for (std::size_t v : S.entries)
        if (v >= n) {
          fail("variable index " + std::to_string(v) + " out of range");
          return rep;
        }
      if (uniq.size() != S.entries.size()) {
        fail("repeated entry within a small block of big block " +
             std::to_string(b + 1));
        return rep;
      }
    }
    // small blocks of one big block are pairwise disjoint
    for (std::size_t s = 0; s < B.small_blocks.size(); ++s)
      for (std::size_t s2 = s + 1; s2 < B.small_blocks.size(); ++s2)
        for (std::size_t v : B.small_blocks[s].entries)
          for (std::size_t w : B.small_blocks[s2].entries)
            if (v == w) {
              fail("small blocks " + std::to_string(s + 1) + " and " +
                   std::to_string(s2 + 1) + " of big block " + std::to_string(b + 1) +
                   " share " + M.var_name(v));
              return rep;
            }
  }

  std::vector<int> corner_uses(M.big_blocks.size(), 0);
  for (std::size_t i = 0; i < M.big_blocks.size(); ++i) {
    for (std::size_t i2 = i + 1; i2 < M.big_blocks.size(); ++i2) {
      std::set<std::size_t> a = M.big_blocks[i].entry_set();
      std::set<std::size_t> b = M.big_blocks[i2].entry_set();
      std::vector<std::size_t> common;
      for (std::size_t v : a)
        if (b.count(v)) common.push_back(v);
      if (common.empty()) continue;
      if (common.size() == 1 && common[0] == M.big_blocks[i].last_bottom() &&
          common[0] == M.big_blocks[i2].first_top()) {
        if (++corner_uses[i] > 1) {
          fail("big block " + std::to_string(i + 1) +
               " shares its corner with more than one later block");
          return rep;
        }
        continue;
      }
      fail("big blocks " + std::to_string(i + 1) + " and " + std::to_string(i2 + 1) +
           " share " + M.var_name(common[0]) + " outside the corner rule");
      return rep;
    }
  }
  return rep;
}

namespace detail {

inline void require_valid(const BarredMatrix& M) {
  VerificationReport v = validate(M);
  if (!v.ok())
    throw domain_error("invalid barred matrix: " +
                       (v.per_generator.empty() ? std::string("unknown")
                                                : v.per_generator.front().generator));
}

inline void require_simple(const BarredMatrix& M, const char* op) {
  if (!M.simple())
    throw domain_error(std::string(op) + " is defined for simple barred matrices only");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generators of the ideal J.

// All 2x2 minors within each big block, in (block, j, j') order.
inline IdealGens<Rational> minors(const BarredMatrix& M) {
  detail::require_valid(M);
  RationalField Q;
  std::vector<Polynomial<Rational>> gens;
  for (const BigBlock& B : M.big_blocks) {
    std::vector<std::size_t> top = B.top_row(), bot = B.bottom_row();
    const std::size_t c = top.size();
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t j2 = j + 1; j2 < c; ++j2) {
        std::size_t nv = M.ring->nvars();
        auto mono = [&](std::size_t v, std::size_t w) {
          return Monomial::variable(nv, v) * Monomial::variable(nv, w);
        };
        gens.push_back(Polynomial<Rational>::from_terms(
            M.ring, {{mono(top[j], bot[j2]), Q.from_int(1)},
                     {mono(top[j2], bot[j]), Q.from_int(-1)}}));
      }
  }
  return IdealGens<Rational>(M.ring, std::move(gens), "minors");
}

// Products of an upper-row entry of B_i with a lower-row entry of a later
// block, deduplicated (shared corner variables can repeat a product).
inline IdealGens<Rational> cross_products(const BarredMatrix& M) {
  detail::require_valid(M);
  RationalField Q;
  std::vector<Polynomial<Rational>> gens;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const std::size_t nv = M.ring->nvars();
  for (std::size_t i = 0; i < M.big_blocks.size(); ++i) {
    for (std::size_t i2 = i + 1; i2 < M.big_blocks.size(); ++i2) {
      for (std::size_t v : M.big_blocks[i].top_row()) {
        for (std::size_t w : M.big_blocks[i2].bottom_row()) {
          auto key = std::minmax(v, w);
          if (!seen.insert(key).second) continue;
          gens.push_back(Polynomial<Rational>::from_terms(
              M.ring,
              {{Monomial::variable(nv, v) * Monomial::variable(nv, w), Q.from_int(1)}}));
        }
      }
    }
  }
  return IdealGens<Rational>(M.ring, std::move(gens), "cross-products");
}

inline IdealGens<Rational> ideal_J(const BarredMatrix& M, std::string label = "J") {
  IdealGens<Rational> mi = minors(M);
  IdealGens<Rational> cp = cross_products(M);
  std::vector<Polynomial<Rational>> gens = std::move(mi.gens);
  for (auto& g : cp.gens) gens.push_back(std::move(g));
  return IdealGens<Rational>(M.ring, std::move(gens), std::move(label));
}

// ---------------------------------------------------------------------------
// The equation system: alternating binomial-coefficient polynomials per block
// plus the corner sums between blocks.

// F_j of the i-th (simple) block:
//   sum_{k=0}^{j} (-1)^k C(j,k) chain[j+1]^(j-k) * chain[k] * chain[j]^k
// with chain the block's variable chain, 1 <= j <= c-1.
inline Polynomial<Rational> scroll_F(const BarredMatrix& M, std::size_t block,
                                     std::size_t j) {
  detail::require_valid(M);
  detail::require_simple(M, "scroll_F");
  if (block >= M.big_blocks.size()) throw domain_error("block index out of range");
  const std::vector<std::size_t>& chain = M.big_blocks[block].small_blocks[0].entries;
  const std::size_t c = chain.size() - 1;
  if (c < 2) throw domain_error("scroll_F requires block width >= 2");
  if (j < 1 || j > c - 1) throw domain_error("scroll_F index j out of range");

  const std::size_t nv = M.ring->nvars();
  std::vector<Polynomial<Rational>::Term> terms;
  for (std::size_t k = 0; k <= j; ++k) {
    mpz_class coef = binomial_coefficient(static_cast<unsigned long>(j),
                                          static_cast<unsigned long>(k));
    if (k % 2 == 1) coef = -coef;
    Monomial m =
        Monomial::variable(nv, chain[j + 1], static_cast<std::uint32_t>(j - k)) *
        Monomial::variable(nv, chain[k]) *
        Monomial::variable(nv, chain[j], static_cast<std::uint32_t>(k));
    terms.push_back({std::move(m), Rational(coef)});
  }
  return Polynomial<Rational>::from_terms(M.ring, std::move(terms));
}

// G_k = sum_i (upper-left corner of B_i) * (lower-right corner of B_{i+k}),
// for k = 1..r-1.
inline std::vector<Polynomial<Rational>> corner_sums(const BarredMatrix& M) {
  detail::require_valid(M);
  detail::require_simple(M, "corner_sums");
  const std::size_t r = M.big_blocks.size();
  std::vector<Polynomial<Rational>> G;
  const std::size_t nv = M.ring->nvars();
  for (std::size_t k = 1; k < r; ++k) {
    std::vector<Polynomial<Rational>::Term> terms;
    for (std::size_t i = 0; i + k < r; ++i) {
      Monomial m = Monomial::variable(nv, M.big_blocks[i].first_top()) *
                   Monomial::variable(nv, M.big_blocks[i + k].last_bottom());
      terms.push_back({std::move(m), Rational(1)});
    }
    G.push_back(Polynomial<Rational>::from_terms(M.ring, std::move(terms)));
  }
  return G;
}

// F^1_1..F^r_{c_r-1}, G_1..G_{r-1}; exactly (sum_i c_i) - 1 polynomials.
inline IdealGens<Rational> stci_system(const BarredMatrix& M,
                                       std::string label = "stci-system") {
  detail::require_valid(M);
  detail::require_simple(M, "stci_system");
  std::vector<Polynomial<Rational>> gens;
  for (std::size_t b = 0; b < M.big_blocks.size(); ++b) {
    const std::size_t c = M.big_blocks[b].width();
    for (std::size_t j = 1; j + 1 <= c; ++j) gens.push_back(scroll_F(M, b, j));
  }
  for (auto& g : corner_sums(M)) gens.push_back(std::move(g));
  if (gens.size() + 1 != M.total_width())
    throw std::logic_error("equation count does not match sum(c_i) - 1");
  return IdealGens<Rational>(M.ring, std::move(gens), std::move(label));
}

// Layers for the Schmitt-Vogel argument: P_k = summands of G_{r-1-k}, so P_0
// is the single product of the outermost corners.
inline std::vector<std::vector<Polynomial<Rational>>> sv_partition(
    const BarredMatrix& M) {
  detail::require_valid(M);
  detail::require_simple(M, "sv_partition");
  if (M.big_blocks.size() < 2)
    throw domain_error("sv_partition requires at least two big blocks");
  std::vector<Polynomial<Rational>> G = corner_sums(M);
  std::vector<std::vector<Polynomial<Rational>>> layers;
  for (std::size_t k = 0; k + 1 <= G.size(); ++k) {
    const Polynomial<Rational>& g = G[G.size() - 1 - k];
    std::vector<Polynomial<Rational>> layer;
    for (const auto& t : g.terms())
      layer.push_back(Polynomial<Rational>::from_terms(M.ring, {t}));
    layers.push_back(std::move(layer));
  }
  return layers;
}

// ---------------------------------------------------------------------------
// Matrix file format: {"variables": [names], "big_blocks": [[[idx,...],...]]}
// with each innermost list a small block's entry chain.

inline nlohmann::json to_json(const BarredMatrix& M) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BigBlock& B : M.big_blocks) {
    nlohmann::json bb = nlohmann::json::array();
    for (const SmallBlock& S : B.small_blocks) bb.push_back(S.entries);
    blocks.push_back(std::move(bb));
  }
  return nlohmann::json{{"variables", M.ring->vars.names}, {"big_blocks", blocks}};
}

inline BarredMatrix matrix_from_json(const nlohmann::json& j,
                                     MonomialOrder order = MonomialOrder::degrevlex()) {
  if (!j.contains("variables") || !j.contains("big_blocks"))
    throw parse_error("matrix file needs 'variables' and 'big_blocks'");
  VariableSet vs(j.at("variables").get<std::vector<std::string>>());
  BarredMatrix M{make_ring(std::move(vs), std::move(order)), {}};
  for (const auto& bb : j.at("big_blocks")) {
    BigBlock B;
    for (const auto& sb : bb)
      B.small_blocks.push_back(SmallBlock{sb.get<std::vector<std::size_t>>()});
    M.big_blocks.push_back(std::move(B));
  }
  return M;
}

// ---------------------------------------------------------------------------

inline IdealGens<Fp> mod_p(const IdealGens<Rational>& I, const PrimeFieldSpec& gf) {
  std::vector<Polynomial<Fp>> gens;
  for (const auto& g : I.gens) {
    Polynomial<Fp> h = to_prime_field(g, gf);
    if (!h.is_zero_poly()) gens.push_back(std::move(h));
  }
  return IdealGens<Fp>(I.ring, std::move(gens), I.label + " mod " + std::to_string(gf.p));
}

}  // namespace stci

#endif
