#ifndef STCI_GROEBNER_HPP_
#define STCI_GROEBNER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stci/errors.hpp"
#include "stci/field.hpp"
#include "stci/polynomial.hpp"
#include "stci/report.hpp"
#include "stci/ring.hpp"

namespace stci {

// ---------------------------------------------------------------------------
// A labelled generating set.  Generator order is preserved: it is part of
// fixture identity.

template <class K>
struct IdealGens {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;
  std::string label;

  IdealGens(RingPtr r, std::vector<Polynomial<K>> gs, std::string lbl = "")
      : ring(std::move(r)), gens(std::move(gs)), label(std::move(lbl)) {
    for (const auto& g : gens) {
      require_same_ring(ring, g.ring());
      if (g.is_zero_poly()) throw domain_error("ideal generators must be nonzero");
    }
  }
};

inline std::string field_name(const Polynomial<Rational>&) { return "Q"; }
inline std::string field_name(const Polynomial<Fp>& f) {
  if (f.is_zero_poly()) return "GF(?)";
  return "GF(" + std::to_string(f.terms().front().coeff.modulus()) + ")";
}
template <class K>
std::string field_name(const IdealGens<K>& I) {
  return I.gens.empty() ? field_name(Polynomial<K>()) : field_name(I.gens.front());
}
struct BuchbergerCaps {
  std::size_t max_spairs = 100000;
  std::uint32_t max_degree = 60;
};

template <class K>
struct GroebnerBasis {
  RingPtr ring;  // carries the order the basis was computed under
  std::vector<Polynomial<K>> basis;
  ComputationStats stats;
  std::string source_label;

  bool is_unit_ideal() const {
    return basis.size() == 1 && basis.front().leading_monomial().is_one();
  }
};

// ---------------------------------------------------------------------------

template <class K>
Polynomial<K> spolynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  require_same_ring(f.ring(), g.ring());
  Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<K> a =
      f.scaled(inverse(f.leading_coefficient()), f.leading_monomial().divide_into(L));
  Polynomial<K> b =
      g.scaled(inverse(g.leading_coefficient()), g.leading_monomial().divide_into(L));
  return a - b;
}

// Remainder of full multivariate division of f by the (ordered) list G.
// Deterministic: always reduces by the first divisor whose leading monomial
// divides the current leading term.
template <class K>
Polynomial<K> divide_remainder(Polynomial<K> f, const std::vector<Polynomial<K>>& G) {
  if (G.empty()) return f;
  std::vector<typename Polynomial<K>::Term> tail;
  while (!f.is_zero_poly()) {
    bool reduced = false;
    for (const auto& g : G) {
      if (g.leading_monomial().divides(f.leading_monomial())) {
        K factor = f.leading_coefficient() * inverse(g.leading_coefficient());
        f = f - g.scaled(factor, g.leading_monomial().divide_into(f.leading_monomial()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      tail.push_back(f.terms().front());
      f = f - Polynomial<K>::from_terms(f.ring(), {f.terms().front()});
    }
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(tail));
}

namespace detail {

// Display normalization of a basis element: monic over GF(p); over Q clear
// denominators and content so coefficients are integers with gcd 1 and
// positive leading coefficient.
inline Polynomial<Fp> display_normal(const Polynomial<Fp>& f) { return f.monic(); }

inline Polynomial<Rational> display_normal(const Polynomial<Rational>& f) {
  if (f.is_zero_poly()) return f;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    den_lcm = l;
  }
  for (const auto& t : f.terms()) {
    mpz_class n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    num_gcd = g;
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Polynomial<Rational> out = f.scaled(scale);
  if (sgn(out.leading_coefficient()) < 0) out = -out;
  return out;
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (minimal lcm
// degree first, ties by input index) and the two classical pair-elimination
// criteria.  Returns the reduced Groebner basis; output is deterministic for
// fixed input.
template <class K>
GroebnerBasis<K> buchberger(const IdealGens<K>& I,
                            const MonomialOrder& order,
                            const BuchbergerCaps& caps = {}) {
  auto t0 = std::chrono::steady_clock::now();
  RingPtr ring = make_ring(I.ring->vars, order);

  ComputationStats stats;
  std::vector<Polynomial<K>> G;
  for (const auto& g : I.gens) {
    Polynomial<K> h = with_order(g, order);
    if (!h.is_zero_poly()) G.push_back(std::move(h));
  }

  struct Pair {
    std::uint64_t deg;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial L = lcm(G[i].leading_monomial(), G[j].leading_monomial());
      queue.insert({L.degree(), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const Monomial& li = G[p.i].leading_monomial();
    const Monomial& lj = G[p.j].leading_monomial();
    if (coprime(li, lj)) continue;  // first criterion
    Monomial L = lcm(li, lj);
    // second (chain) criterion
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].leading_monomial().divides(L)) continue;
      auto ik = std::minmax(p.i, k);
      auto jk = std::minmax(p.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
        skip = true;
    }
    if (skip) continue;

    if (L.degree() > caps.max_degree)
      throw cap_error("degree bound " + std::to_string(caps.max_degree) +
                          " exceeded while computing Groebner basis",
                      stats);
    if (++stats.spairs > caps.max_spairs)
      throw cap_error("S-pair cap " + std::to_string(caps.max_spairs) + " exceeded",
                      stats);
    stats.max_degree = std::max<std::uint32_t>(stats.max_degree,
                                               static_cast<std::uint32_t>(L.degree()));

    Polynomial<K> s = divide_remainder(spolynomial(G[p.i], G[p.j]), G);
    if (s.is_zero_poly()) continue;
    if (s.total_degree() > caps.max_degree)
      throw cap_error("degree bound exceeded by new basis element", stats);
    G.push_back(s.monic());
    push_pairs(G.size() - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading_monomial().divides(G[i].leading_monomial())) {
        // on equal leading monomials keep the earlier element
        if (G[i].leading_monomial() == G[j].leading_monomial())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // reduce tails against the other elements
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<K> r = divide_remainder(minimal[i], others);
    if (!r.is_zero_poly()) reduced.push_back(detail::display_normal(r.monic()));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) {
              return ring->order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
            });

  auto t1 = std::chrono::steady_clock::now();
  stats.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return GroebnerBasis<K>{ring, std::move(reduced), stats, I.label};
}

template <class K>
GroebnerBasis<K> buchberger(const IdealGens<K>& I, const BuchbergerCaps& caps = {}) {
  return buchberger(I, I.ring->order, caps);
}

// ---------------------------------------------------------------------------
// Membership oracles.

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  return divide_remainder(with_order(f, G.ring->order), G.basis);
}

template <class K>
bool ideal_contains(const GroebnerBasis<K>& G, const Polynomial<K>& f) {
  return normal_form(f, G).is_zero_poly();
}

template <class K>
bool ideal_contains(const IdealGens<K>& I, const Polynomial<K>& f,
                    const BuchbergerCaps& caps = {}) {
  return ideal_contains(buchberger(I, caps), f);
}

namespace detail {

inline std::string fresh_variable_name(const VariableSet& vs) {
  std::string name = "t";
  while (vs.index_of(name) >= 0) name = "_" + name;
  return name;
}

}  // namespace detail

// Radical membership by the Rabinowitsch device: f vanishes on V(I) iff
// 1 lies in I + (t*f - 1) in one extra variable.  Any global order works for
// the unit test; we use degrevlex on the extended ring.
template <class K>
bool radical_contains(const IdealGens<K>& I, const Polynomial<K>& f,
                      const BuchbergerCaps& caps = {},
                      ComputationStats* accum = nullptr) {
  require_same_ring(I.ring, f.ring());
  if (f.is_zero_poly()) return true;
  std::vector<std::string> names = I.ring->vars.names;
  names.push_back(detail::fresh_variable_name(I.ring->vars));
  RingPtr ext = make_ring(VariableSet(std::move(names)), MonomialOrder::degrevlex());

  std::vector<Polynomial<K>> gens;
  gens.reserve(I.gens.size() + 1);
  for (const auto& g : I.gens) gens.push_back(extend_to_ring(g, ext));
  Polynomial<K> fe = extend_to_ring(f, ext);
  K one = inverse(fe.leading_coefficient()) * fe.leading_coefficient();
  Polynomial<K> t = Polynomial<K>::variable(ext, ext->nvars() - 1, one);
  gens.push_back(t * fe - Polynomial<K>::constant(ext, one));

  GroebnerBasis<K> gb =
      buchberger(IdealGens<K>(ext, std::move(gens), I.label + "+rabinowitsch"), caps);
  if (accum) {
    accum->spairs += gb.stats.spairs;
    accum->max_degree = std::max(accum->max_degree, gb.stats.max_degree);
    accum->millis += gb.stats.millis;
  }
  return gb.is_unit_ideal();
}

// Per-generator radical equality: every generator of A lies in sqrt(B) and
// vice versa.  Plain membership is tried first (it implies radical
// membership and reuses one basis per side).
template <class K>
VerificationReport radical_equal(const IdealGens<K>& A, const IdealGens<K>& B,
                                 const BuchbergerCaps& caps = {}) {
  VerificationReport rep;
  rep.claim = "sqrt(" + (A.label.empty() ? std::string("A") : A.label) + ") == sqrt(" +
              (B.label.empty() ? std::string("B") : B.label) + ")";
  rep.field = field_name(A);
  rep.order = A.ring->order.name();
  rep.verdict = Verdict::True;

  auto one_direction = [&](const IdealGens<K>& gens_of, const IdealGens<K>& ideal) {
    std::optional<GroebnerBasis<K>> gb;
    for (const auto& g : gens_of.gens) {
      VerificationReport::Entry e;
      e.generator = to_string(g);
      bool member = false;
      try {
        if (!gb) {
          gb = buchberger(ideal, caps);
          rep.stats.spairs += gb->stats.spairs;
          rep.stats.max_degree = std::max(rep.stats.max_degree, gb->stats.max_degree);
        }
        member = ideal_contains(*gb, g);
        if (member) {
          e.result = "in-ideal";
          e.power = 1;
        } else if (radical_contains(ideal, g, caps, &rep.stats)) {
          e.result = "in-radical";
        } else {
          e.result = "not-in-radical";
          rep.verdict = Verdict::False;
        }
      } catch (const cap_error& ce) {
        e.result = "inconclusive: " + std::string(ce.what());
        if (rep.verdict == Verdict::True) rep.verdict = Verdict::Inconclusive;
      }
      rep.per_generator.push_back(std::move(e));
    }
  };

  auto t0 = std::chrono::steady_clock::now();
  one_direction(A, B);
  one_direction(B, A);
  auto t1 = std::chrono::steady_clock::now();
  rep.stats.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

// Least e <= cap with f^e in I, searched by incremental normal forms
// (nf(f^e) = nf(nf(f^(e-1)) * f), which keeps intermediate degrees down).
template <class K>
std::optional<std::uint32_t> min_power_in_ideal(const Polynomial<K>& f,
                                                const IdealGens<K>& I,
                                                std::uint32_t cap,
                                                const BuchbergerCaps& caps = {}) {
  if (cap < 1) throw domain_error("power cap must be positive");
  GroebnerBasis<K> gb = buchberger(I, caps);
  Polynomial<K> fw = with_order(f, gb.ring->order);
  Polynomial<K> r = fw;
  for (std::uint32_t e = 1; e <= cap; ++e) {
    r = divide_remainder(r, gb.basis);
    if (r.is_zero_poly()) return e;
    if (e < cap) r = r * fw;
  }
  return std::nullopt;
}

// Checks J^m subset I by enumerating all degree-m products of generators of J
// (multisets).  Refuses when the multiset count exceeds product_cap.
template <class K>
VerificationReport ideal_power_contained(const IdealGens<K>& J, const IdealGens<K>& I,
                                         std::uint32_t m, std::size_t product_cap = 10000,
                                         const BuchbergerCaps& caps = {}) {
  if (m < 1) throw domain_error("power must be positive");
  require_same_ring(J.ring, I.ring);

  // C(n+m-1, m) products
  mpz_class count = 1;
  const std::size_t n = J.gens.size();
  for (std::uint32_t k = 1; k <= m; ++k) {
    count *= mpz_class(static_cast<unsigned long>(n + k - 1));
    count /= k;
  }
  if (count > product_cap)
    throw cap_error("refusing to enumerate " + count.get_str() +
                        " generator products (cap " + std::to_string(product_cap) +
                        "); consider per-generator min_power_in_ideal",
                    ComputationStats{});

  VerificationReport rep;
  rep.claim = (J.label.empty() ? std::string("J") : J.label) + "^" + std::to_string(m) +
              " subset (" + (I.label.empty() ? std::string("I") : I.label) + ")";
  rep.field = field_name(J);
  rep.order = J.ring->order.name();
  rep.verdict = Verdict::True;

  auto t0 = std::chrono::steady_clock::now();
  GroebnerBasis<K> gb = buchberger(I, caps);
  rep.stats = gb.stats;

  std::size_t tested = 0;
  // odometer over non-decreasing index tuples
  std::vector<std::size_t> idx(m, 0);
  bool done = n == 0;
  while (!done) {
    Polynomial<K> prod = with_order(J.gens[idx[0]], gb.ring->order);
    for (std::uint32_t k = 1; k < m; ++k)
      prod = prod * with_order(J.gens[idx[k]], gb.ring->order);
    ++tested;
    if (!ideal_contains(gb, prod)) {
      VerificationReport::Entry e;
      e.generator = to_string(prod);
      e.result = "not-in-ideal";
      rep.per_generator.push_back(std::move(e));
      rep.verdict = Verdict::False;
      break;
    }
    // advance
    std::size_t pos = m;
    while (pos-- > 0) {
      if (idx[pos] + 1 < n) {
        ++idx[pos];
        for (std::size_t q = pos + 1; q < m; ++q) idx[q] = idx[pos];
        break;
      }
      if (pos == 0) done = true;
    }
  }

  VerificationReport::Entry summary;
  summary.generator = "(all products)";
  summary.result = "tested " + std::to_string(tested) + " products";
  rep.per_generator.push_back(std::move(summary));
  auto t1 = std::chrono::steady_clock::now();
  rep.stats.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

}  // namespace stci

#endif
