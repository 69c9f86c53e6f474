#ifndef STCI_VARIETIES_HPP_
#define STCI_VARIETIES_HPP_

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "stci/errors.hpp"
#include "stci/field.hpp"
#include "stci/groebner.hpp"
#include "stci/polynomial.hpp"
#include "stci/report.hpp"
#include "stci/scroll.hpp"

namespace stci {

// Common zeros in GF(p)^N of a generating set, found by exhaustive
// evaluation.  A necessary-condition oracle, independent of the Groebner
// path: reports based on it say "consistency check", never "proof".
struct PointSet {
  std::int64_t p = 0;
  std::size_t dim = 0;
  std::vector<std::vector<std::int64_t>> points;  // sorted (odometer order)

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.p == b.p && a.dim == b.dim && a.points == b.points;
  }
};

inline PointSet enumerate_points(const IdealGens<Rational>& I, std::int64_t p,
                                 std::uint64_t budget = 10000000) {
  PrimeFieldSpec gf(p);
  const std::size_t n = I.ring->nvars();
  // refuse when p^n exceeds the budget
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(p))
      throw cap_error("enumeration of GF(" + std::to_string(p) + ")^" +
                          std::to_string(n) + " exceeds budget " +
                          std::to_string(budget),
                      ComputationStats{});
    total *= static_cast<std::uint64_t>(p);
  }

  IdealGens<Fp> gens = mod_p(I, gf);
  PointSet ps;
  ps.p = p;
  ps.dim = n;

  std::vector<std::int64_t> x(n, 0);
  std::vector<Fp> point(n, Fp(0, p));
  while (true) {
    bool all_zero = true;
    for (const auto& g : gens.gens) {
      if (!is_zero(g.evaluate(point))) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ps.points.push_back(x);
    // odometer
    std::size_t i = n;
    while (i-- > 0) {
      if (++x[i] < p) {
        point[i] = Fp(x[i], p);
        break;
      }
      x[i] = 0;
      point[i] = Fp(0, p);
      if (i == 0) return ps;
    }
    if (n == 0) return ps;
  }
}

// second pass, used by tests: every stored point kills every generator
inline bool reverify_points(const IdealGens<Rational>& I, const PointSet& ps) {
  PrimeFieldSpec gf(ps.p);
  IdealGens<Fp> gens = mod_p(I, gf);
  for (const auto& x : ps.points) {
    std::vector<Fp> point;
    point.reserve(x.size());
    for (std::int64_t v : x) point.emplace_back(v, ps.p);
    for (const auto& g : gens.gens)
      if (!is_zero(g.evaluate(point))) return false;
  }
  return true;
}

inline VerificationReport same_vanishing_set(const IdealGens<Rational>& A,
                                             const IdealGens<Rational>& B,
                                             std::int64_t p,
                                             std::uint64_t budget = 10000000) {
  require_same_ring(A.ring, B.ring);
  VerificationReport rep;
  rep.claim = "consistency check: V(" + (A.label.empty() ? "A" : A.label) + ") == V(" +
              (B.label.empty() ? "B" : B.label) + ") over GF(" + std::to_string(p) + ")";
  rep.field = "GF(" + std::to_string(p) + ")";
  rep.order = A.ring->order.name();

  PointSet va = enumerate_points(A, p, budget);
  PointSet vb = enumerate_points(B, p, budget);
  if (va == vb) {
    rep.verdict = Verdict::True;
    VerificationReport::Entry e;
    e.generator = "(point sets)";
    e.result = std::to_string(va.points.size()) + " common zeros on both sides";
    rep.per_generator.push_back(std::move(e));
    return rep;
  }

  rep.verdict = Verdict::False;
  // witness: a point on one side only, plus a generator it violates
  auto report_witness = [&](const PointSet& in, const IdealGens<Rational>& against) {
    PrimeFieldSpec gf(p);
    IdealGens<Fp> gens = mod_p(against, gf);
    for (const auto& x : in.points) {
      std::vector<Fp> point;
      for (std::int64_t v : x) point.emplace_back(v, p);
      for (const auto& g : gens.gens) {
        if (!is_zero(g.evaluate(point))) {
          std::string pt = "(";
          for (std::size_t i = 0; i < x.size(); ++i)
            pt += (i ? "," : "") + std::to_string(x[i]);
          pt += ")";
          VerificationReport::Entry e;
          e.generator = canonical_string(g);
          e.result = "violated at " + pt;
          rep.per_generator.push_back(std::move(e));
          return true;
        }
      }
    }
    return false;
  };
  if (!report_witness(va, B)) report_witness(vb, A);
  return rep;
}

// one point per line, comma-separated residues
inline void dump_points(const PointSet& ps, std::ostream& os) {
  for (const auto& x : ps.points) {
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << "\n";
  }
}

}  // namespace stci

#endif
