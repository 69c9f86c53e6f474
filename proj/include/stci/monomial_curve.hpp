#ifndef STCI_MONOMIAL_CURVE_HPP_
#define STCI_MONOMIAL_CURVE_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "stci/errors.hpp"
#include "stci/polynomial.hpp"

namespace stci {

// Exponent-arithmetic layer for monomial parametrizations.  Exponents here
// are arbitrary precision (values like 534*42 appear) and deliberately kept
// apart from the machine-word monomials of the Groebner kernel.

// rows = ambient coordinates, columns = parameters; entry (i, u) is the
// exponent of parameter u in the i-th coordinate's parametrizing monomial.
struct MonomialParametrization {
  std::vector<std::string> coordinates;
  std::vector<std::string> parameters;
  std::vector<std::vector<mpz_class>> exponent_matrix;

  MonomialParametrization(std::vector<std::string> coords,
                          std::vector<std::string> params,
                          std::vector<std::vector<mpz_class>> mat)
      : coordinates(std::move(coords)),
        parameters(std::move(params)),
        exponent_matrix(std::move(mat)) {
    if (exponent_matrix.size() != coordinates.size())
      throw domain_error("exponent matrix row count mismatch");
    for (const auto& row : exponent_matrix) {
      if (row.size() != parameters.size())
        throw domain_error("exponent matrix column count mismatch");
      bool nonzero = false;
      for (const mpz_class& e : row) {
        if (e < 0) throw domain_error("negative exponent in parametrization");
        if (e > 0) nonzero = true;
      }
      if (!nonzero) throw domain_error("parametrization has a constant coordinate");
    }
  }

  int coordinate_index(const std::string& name) const {
    for (std::size_t i = 0; i < coordinates.size(); ++i)
      if (coordinates[i] == name) return static_cast<int>(i);
    return -1;
  }
};

// plus - minus, both monomials over the ambient coordinates with big
// exponents
struct CurveBinomial {
  std::vector<mpz_class> plus;
  std::vector<mpz_class> minus;
};

// "y1^42 - x1^19*x2^22*y2": exactly two '-'-joined monomial terms with unit
// coefficients.
inline CurveBinomial parse_binomial(const std::string& text,
                                    const MonomialParametrization& P) {
  detail::PolyLexer lx(text);
  CurveBinomial b{std::vector<mpz_class>(P.coordinates.size(), 0),
                  std::vector<mpz_class>(P.coordinates.size(), 0)};
  auto parse_monomial = [&](std::vector<mpz_class>& out) {
    while (true) {
      std::string name = lx.take_identifier();
      int idx = P.coordinate_index(name);
      if (idx < 0) throw parse_error("unknown coordinate '" + name + "'");
      mpz_class e = 1;
      if (lx.peek() == '^') {
        lx.take();
        e = mpz_class(lx.take_integer());
      }
      out[static_cast<std::size_t>(idx)] += e;
      if (lx.peek() == '*') {
        lx.take();
        continue;
      }
      break;
    }
  };
  parse_monomial(b.plus);
  if (lx.take() != '-') throw parse_error("expected '-' in binomial: " + text);
  parse_monomial(b.minus);
  if (!lx.done()) throw parse_error("trailing input in binomial: " + text);
  return b;
}

namespace detail {

inline std::vector<mpz_class> parameter_degrees(const MonomialParametrization& P,
                                                const std::vector<mpz_class>& exps) {
  std::vector<mpz_class> deg(P.parameters.size(), 0);
  for (std::size_t c = 0; c < exps.size(); ++c)
    for (std::size_t u = 0; u < deg.size(); ++u)
      deg[u] += P.exponent_matrix[c][u] * exps[c];
  return deg;
}

}  // namespace detail

// The substitution of the parametrization kills the binomial iff both sides
// have the same degree in every parameter.
inline bool binomial_in_toric(const MonomialParametrization& P, const CurveBinomial& b) {
  if (b.plus.size() != P.coordinates.size() || b.minus.size() != P.coordinates.size())
    throw context_error("binomial dimension mismatch");
  return detail::parameter_degrees(P, b.plus) == detail::parameter_degrees(P, b.minus);
}

// Equal total parameter degree on both sides.
inline bool homogeneity_check(const MonomialParametrization& P, const CurveBinomial& b) {
  if (b.plus.size() != P.coordinates.size() || b.minus.size() != P.coordinates.size())
    throw context_error("binomial dimension mismatch");
  auto total = [&](const std::vector<mpz_class>& e) {
    mpz_class t = 0;
    for (const mpz_class& d : detail::parameter_degrees(P, e)) t += d;
    return t;
  };
  return total(b.plus) == total(b.minus);
}

// Fixture format: {"coordinates": [...], "parameters": [...],
//                  "exponent_matrix": [[ints]], "binomials": [strings]}
inline MonomialParametrization parametrization_from_json(const nlohmann::json& j) {
  std::vector<std::vector<mpz_class>> mat;
  for (const auto& row : j.at("exponent_matrix")) {
    std::vector<mpz_class> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.emplace_back(e.get<std::string>());
      else
        r.emplace_back(static_cast<long>(e.get<std::int64_t>()));
    }
    mat.push_back(std::move(r));
  }
  return MonomialParametrization(j.at("coordinates").get<std::vector<std::string>>(),
                                 j.at("parameters").get<std::vector<std::string>>(),
                                 std::move(mat));
}

}  // namespace stci

#endif
