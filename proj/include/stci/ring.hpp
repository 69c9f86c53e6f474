#ifndef STCI_RING_HPP_
#define STCI_RING_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "stci/errors.hpp"

namespace stci {

// ---------------------------------------------------------------------------
// Variables are identified by index; names are display-only.

struct VariableSet {
  std::vector<std::string> names;

  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> ns) : names(std::move(ns)) {
    if (names.empty()) throw domain_error("empty variable set");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
      throw domain_error("variable names must be pairwise distinct");
  }

  // X1..Xn
  static VariableSet numbered(std::size_t n, const std::string& prefix = "X") {
    std::vector<std::string> ns;
    ns.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) ns.push_back(prefix + std::to_string(i));
    return VariableSet(std::move(ns));
  }

  std::size_t count() const { return names.size(); }

  // -1 when absent
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names == b.names;
  }
};

// ---------------------------------------------------------------------------
// Monomials: dense exponent vectors with checked 32-bit exponents.

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t idx, std::uint32_t e = 1) {
    Monomial m(nvars);
    m.exps_[idx] = e;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      std::uint64_t s = std::uint64_t(a.exps_[i]) + b.exps_[i];
      if (s > std::numeric_limits<std::uint32_t>::max())
        throw overflow_error("monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  // componentwise <=
  bool divides(const Monomial& b) const {
    check(b);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  // b / a, requires a | b
  Monomial divide_into(const Monomial& b) const {
    check(b);
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > b.exps_[i]) throw domain_error("inexact monomial division");
      r.exps_[i] = b.exps_[i] - exps_[i];
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  // variable indices with nonzero exponent
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  void check(const Monomial& b) const {
    if (exps_.size() != b.exps_.size())
      throw context_error("monomials over different variable sets");
  }
  std::vector<std::uint32_t> exps_;
};

// ---------------------------------------------------------------------------
// Monomial orders.  All three are global orders (1 is minimal) compatible
// with multiplication; the elimination order additionally ranks any monomial
// touching the block above every block-free monomial.

struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Elimination };

  Kind kind = Kind::DegRevLex;
  std::vector<std::size_t> block;  // Elimination only: indices eliminated first

  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, {}}; }
  static MonomialOrder elimination(std::vector<std::size_t> block) {
    return {Kind::Elimination, std::move(block)};
  }

  std::string name() const {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::DegRevLex: return "degrevlex";
      case Kind::Elimination: return "elimination";
    }
    return "?";
  }

  // <0, 0, >0 as a is below, equal to, above b
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex:
        return lex_compare(a, b);
      case Kind::DegRevLex:
        return degrevlex_compare(a, b);
      case Kind::Elimination: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i : block) {
          da += a.exponent(i);
          db += b.exponent(i);
        }
        if (da != db) return da < db ? -1 : 1;
        return degrevlex_compare(a, b);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.block == b.block;
  }

private:
  static int lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (a.exponent(i) != b.exponent(i))
        return a.exponent(i) < b.exponent(i) ? -1 : 1;
    return 0;
  }
  static int degrevlex_compare(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;)
      if (a.exponent(i) != b.exponent(i))
        return a.exponent(i) > b.exponent(i) ? -1 : 1;
    return 0;
  }
};

// ---------------------------------------------------------------------------
// A ring context: variable set plus ambient order.  Polynomials share one
// immutable Ring; operations require compatible contexts.

struct Ring {
  VariableSet vars;
  MonomialOrder order;

  Ring(VariableSet vs, MonomialOrder ord = MonomialOrder::degrevlex())
      : vars(std::move(vs)), order(std::move(ord)) {}

  std::size_t nvars() const { return vars.count(); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars == b.vars && a.order == b.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(VariableSet vs, MonomialOrder ord = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring>(std::move(vs), std::move(ord));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b))
    throw context_error("operands belong to different ring contexts");
}

}  // namespace stci

#endif
