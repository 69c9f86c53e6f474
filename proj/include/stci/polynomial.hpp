#ifndef STCI_POLYNOMIAL_HPP_
#define STCI_POLYNOMIAL_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stci/errors.hpp"
#include "stci/field.hpp"
#include "stci/ring.hpp"

namespace stci {

// Sparse polynomial over an exact field K (Rational or Fp).  Terms are kept
// sorted descending under the ring's order, with no zero coefficients and no
// duplicate monomials; the zero polynomial is the empty list.
template <class K>
class Polynomial {
public:
  struct Term {
    Monomial mono;
    K coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, K c) {
    Polynomial p(std::move(ring));
    if (!is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t idx, K one) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(p.ring_->nvars(), idx), std::move(one)});
    return p;
  }

  static Polynomial from_terms(RingPtr ring, std::vector<Term> raw) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(raw);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    require_nonzero();
    return terms_.front().mono;
  }
  const K& leading_coefficient() const {
    require_nonzero();
    return terms_.front().coeff;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    Polynomial r(f.ring_);
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    // merge of two descending term lists
    std::size_t i = 0, j = 0;
    const auto& ord = f.ring_->order;
    while (i < f.terms_.size() && j < g.terms_.size()) {
      int c = ord.compare(f.terms_[i].mono, g.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(g.terms_[j++]);
      } else {
        K s = f.terms_[i].coeff + g.terms_[j].coeff;
        if (!is_zero(s)) r.terms_.push_back({f.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
  }

  friend Polynomial operator-(const Polynomial& f) {
    Polynomial r = f;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    return f + (-g);
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    Polynomial acc(f.ring_);
    for (const Term& t : g.terms_) acc = acc + f.scaled(t.coeff, t.mono);
    return acc;
  }

  // coefficient * monomial * this, in one pass (stays sorted)
  Polynomial scaled(const K& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      K nc = t.coeff * c;
      if (!is_zero(nc)) r.terms_.push_back({t.mono * m, std::move(nc)});
    }
    return r;
  }

  Polynomial scaled(const K& c) const { return scaled(c, Monomial(ring_->nvars())); }

  Polynomial pow(std::uint32_t e) const {
    if (is_zero_poly() && e > 0) return *this;
    Polynomial r = constant(ring_, one_like());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  K evaluate(const std::vector<K>& point) const {
    if (point.size() != ring_->nvars())
      throw context_error("evaluation point has wrong length");
    // for an empty term list the field zero is inferred from the point
    K acc = terms_.empty() && !point.empty() ? point[0] - point[0] : zero_like();
    for (const Term& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        for (std::uint32_t e = t.mono.exponent(i); e > 0; --e) v *= point[i];
      }
      acc += v;
    }
    return acc;
  }

  Polynomial monic() const {
    require_nonzero();
    return scaled(inverse(terms_.front().coeff));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    if (f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].mono == g.terms_[i].mono) ||
          !(f.terms_[i].coeff == g.terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

  // Re-sorts, merges duplicates, drops zeros.  Idempotent.
  void normalize() {
    const auto& ord = ring_->order;
    std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return ord.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
        if (is_zero(out.back().coeff)) out.pop_back();
      } else if (!is_zero(t.coeff)) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

private:
  void require_nonzero() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
  }
  K zero_like() const {
    if (!terms_.empty()) return terms_.front().coeff - terms_.front().coeff;
    return K{};
  }
  K one_like() const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

template <>
inline Rational Polynomial<Rational>::one_like() const {
  return Rational(1);
}
template <>
inline Fp Polynomial<Fp>::one_like() const {
  if (terms_.empty()) throw domain_error("cannot infer modulus from zero polynomial");
  return Fp(1, terms_.front().coeff.modulus());
}

// ---------------------------------------------------------------------------
// Canonical text form: descending terms, explicit '*', '^' powers, integer or
// a/b coefficients.  Example: "X3*X5 - X4^2".

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero_poly()) return "0";
  const auto& names = f.ring()->vars.names;
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += vars;
    }
  }
  return out;
}

// Fixture-stable display: terms sorted descending under lex regardless of the
// ambient order, which matches how the generators are conventionally written
// (e.g. "X3*X5 - X4^2").
template <class K>
std::string canonical_string(const Polynomial<K>& f) {
  return to_string(with_order(f, MonomialOrder::lex()));
}

namespace detail {

class PolyLexer {
public:
  explicit PolyLexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    return s_[pos_++];
  }
  std::string take_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected integer at position " + std::to_string(start) + " in '" + s_ + "'");
    return s_.substr(start, pos_ - start);
  }
  std::string take_identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
    }
    if (pos_ == start) throw parse_error("expected identifier at position " + std::to_string(start) + " in '" + s_ + "'");
    return s_.substr(start, pos_ - start);
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the canonical text form back into a polynomial.
template <class F>
Polynomial<typename F::Elem> parse_polynomial(const std::string& text, const RingPtr& ring,
                                              const F& field) {
  using K = typename F::Elem;
  using Poly = Polynomial<K>;
  detail::PolyLexer lx(text);
  std::vector<typename Poly::Term> terms;

  bool expect_term = true;
  int sign = 1;
  while (!lx.done()) {
    if (expect_term) {
      // one term: optional signs, optional coefficient, '*'-joined powers
      while (lx.peek() == '+' || lx.peek() == '-')
        if (lx.take() == '-') sign = -sign;
      K coeff = field.from_int(sign);
      Monomial mono(ring->nvars());
      bool saw_factor = false;
      while (true) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
          mpz_class num(lx.take_integer());
          if (lx.peek() == '/') {
            lx.take();
            mpz_class den(lx.take_integer());
            coeff = coeff * field.from_fraction(num, den);
          } else {
            coeff = coeff * field.from_fraction(num, 1);
          }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::string name = lx.take_identifier();
          int idx = ring->vars.index_of(name);
          if (idx < 0) throw parse_error("unknown variable '" + name + "'");
          std::uint32_t e = 1;
          if (lx.peek() == '^') {
            lx.take();
            mpz_class big(lx.take_integer());
            if (!big.fits_uint_p()) throw overflow_error("exponent too large");
            e = static_cast<std::uint32_t>(big.get_ui());
          }
          mono = mono * Monomial::variable(ring->nvars(), static_cast<std::size_t>(idx), e);
        } else {
          throw parse_error(std::string("unexpected character '") + c + "' in '" + text + "'");
        }
        saw_factor = true;
        if (lx.peek() == '*') {
          lx.take();
          continue;
        }
        break;
      }
      if (!saw_factor) throw parse_error("empty term in '" + text + "'");
      terms.push_back({std::move(mono), std::move(coeff)});
      expect_term = false;
      sign = 1;
    } else {
      char c = lx.take();
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        throw parse_error(std::string("expected '+' or '-', got '") + c + "'");
      }
      expect_term = true;
    }
  }
  if (expect_term && !terms.empty()) throw parse_error("dangling sign in '" + text + "'");
  return Poly::from_terms(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Ring transport helpers.

// Carries a polynomial into a larger ring whose first variables coincide
// with the source ring's (used for the Rabinowitsch extension).
template <class K>
Polynomial<K> extend_to_ring(const Polynomial<K>& f, const RingPtr& bigger) {
  if (bigger->nvars() < f.ring()->nvars())
    throw context_error("target ring has fewer variables");
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(bigger->nvars(), 0);
    std::copy(t.mono.exponents().begin(), t.mono.exponents().end(), e.begin());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<K>::from_terms(bigger, std::move(terms));
}

// Same variables, different order.
template <class K>
Polynomial<K> with_order(const Polynomial<K>& f, const MonomialOrder& ord) {
  RingPtr r = make_ring(f.ring()->vars, ord);
  std::vector<typename Polynomial<K>::Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial<K>::from_terms(r, std::move(terms));
}

// Reduces an integer/rational polynomial mod p.  Throws if p divides a
// denominator.
inline Polynomial<Fp> to_prime_field(const Polynomial<Rational>& f, const PrimeFieldSpec& gf) {
  std::vector<Polynomial<Fp>::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Fp c = gf.from_fraction(t.coeff.get_num(), t.coeff.get_den());
    terms.push_back({t.mono, c});
  }
  return Polynomial<Fp>::from_terms(f.ring(), std::move(terms));
}

}  // namespace stci

#endif
