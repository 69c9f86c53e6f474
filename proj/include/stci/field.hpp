#ifndef STCI_FIELD_HPP_
#define STCI_FIELD_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "stci/errors.hpp"

namespace stci {

// ---------------------------------------------------------------------------
// Exact rationals: GMP's mpq_class, always canonical (lowest terms, positive
// denominator), so equality is structural.

using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inverse(const Rational& a) {
  if (is_zero(a)) throw domain_error("inverse of zero");
  return 1 / a;
}
inline std::string to_string(const Rational& a) {
  return a.get_str();
}

// ---------------------------------------------------------------------------
// Prime fields GF(p), p < 2^31 so products fit in int64.  Each element
// carries its modulus; mixing moduli is a context error.

class Fp {
public:
  Fp() : v_(0), p_(0) {}
  Fp(std::int64_t v, std::int64_t p) : p_(p) {
    if (p <= 0) throw domain_error("modulus must be positive");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    return Fp(a.v_ + b.v_, a.same(b));
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    return Fp(a.v_ - b.v_, a.same(b));
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return Fp(a.v_ * b.v_, a.same(b));
  }
  friend Fp operator-(const Fp& a) { return Fp(-a.v_, a.p_); }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

private:
  std::int64_t same(const Fp& b) const {
    if (p_ != b.p_) throw context_error("mixed prime-field moduli");
    return p_;
  }
  std::int64_t v_;
  std::int64_t p_;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline bool is_one(const Fp& a) { return a.value() == 1; }

inline Fp inverse(const Fp& a) {
  if (a.value() == 0) throw domain_error("inverse of zero");
  // extended Euclid
  std::int64_t r0 = a.modulus(), r1 = a.value(), t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  return Fp(t0, a.modulus());
}

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

// ---------------------------------------------------------------------------
// Field descriptors: the runtime choice of coefficient field, also the
// factory used by parsers.

struct RationalField {
  using Elem = Rational;
  Elem from_int(long n) const { return Rational(n); }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::string name() const { return "Q"; }
};

struct PrimeFieldSpec {
  std::int64_t p;

  explicit PrimeFieldSpec(std::int64_t p) : p(p) {
    if (p < 2) throw domain_error("modulus must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw domain_error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t(1) << 31)) throw domain_error("modulus too large");
  }

  using Elem = Fp;
  Elem from_int(long n) const { return Fp(n, p); }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    mpz_class n = num % p, d = den % p;
    Fp fn(n.get_si(), p), fd(d.get_si(), p);
    if (is_zero(fd)) throw domain_error("denominator divisible by " + std::to_string(p));
    return fn * inverse(fd);
  }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

}  // namespace stci

#endif
