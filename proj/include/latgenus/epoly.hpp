#pragma once

// Integer polynomials in u, v used as Hodge-Deligne (E-)polynomial fixtures.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latgenus/arith.hpp"

namespace latgenus {

class BivariatePolynomial {
 public:
  using Exponents = std::pair<long, long>;  // (power of u, power of v)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Integer& c);
  static BivariatePolynomial monomial(const Integer& c, long pu, long pv);

  Integer coefficient(long pu, long pv) const;
  /// Nonzero terms in increasing (pu, pv) order.
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Integer& c);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Integer& c) { return a *= c; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

  BivariatePolynomial pow(unsigned long e) const;
  Integer evaluate(const Integer& u, const Integer& v) const;

  /// Human-readable form, highest degree first, e.g. "u^2v^2 - 2uv + 1".
  std::string to_string() const;

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  void add_term(const Exponents& e, const Integer& c);
  std::map<Exponents, Integer> terms_;
};

/// E((C*)^d) = (uv - 1)^d.
BivariatePolynomial e_torus(unsigned long d);

/// Toric variety stratified by tori: sum over d of f_d (uv - 1)^{n-d}, where
/// f_d counts the d-dimensional cones of the fan.
BivariatePolynomial e_toric(const std::vector<Integer>& fvector, unsigned long n);

/// Generic curve with Newton polygon of g interior and b boundary lattice
/// points: uv - g(u+v) - (b-1) in the torus, uv - g(u+v) + 1 when compact.
BivariatePolynomial curve_e_expected(long g, long b, bool compact = false);

/// e^{p,+} = sum over q of the coefficient of u^p v^q.
Integer chi_y_from_E(const BivariatePolynomial& e, long p);

}  // namespace latgenus
