#pragma once

// Ehrhart polynomials by exact interpolation, h*-vectors, reciprocity and
// the Cayley-polytope Ehrhart sum.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latgenus/arith.hpp"
#include "latgenus/combinatorics.hpp"
#include "latgenus/polytope.hpp"

namespace latgenus {

/// Univariate polynomial with exact rational coefficients; coefficient i
/// multiplies m^i. The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  /// Unique polynomial of degree < values.size() through (nodes[i], values[i]).
  static RationalPolynomial interpolate(const std::vector<long>& nodes,
                                        const std::vector<Rational>& values);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& m) const;

  /// Coefficients as "num/den" strings, constant term first.
  std::vector<std::string> fraction_strings() const;

  bool operator==(const RationalPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Evaluates the polynomial at an integer.
Rational ehr_eval(const RationalPolynomial& poly, long m);

/// h*_0 .. h*_d of a lattice polytope of dimension d.
using HStarVector = std::vector<Integer>;

/// Interpolates m -> |mP ∩ Z^n| on the nodes m = 0..dim(P).
RationalPolynomial ehrhart_polynomial(const LatticePolytope& p, const EnumOptions& opts = {});

/// h*_k = sum_{j<=k} (-1)^{k-j} C(d+1, k-j) ehr(P; j) for k = 0..d.
HStarVector h_star(const LatticePolytope& p, const EnumOptions& opts = {});

/// h*-vector from the Ehrhart counts ehr(P; 0..d) of a d-dimensional polytope.
HStarVector h_star_from_counts(std::size_t dim, const std::vector<Integer>& counts);

/// (-1)^dim(P) ehr(P; -1), the interior count predicted by reciprocity.
Integer interior_via_reciprocity(const LatticePolytope& p, const EnumOptions& opts = {});

/// Sum of |P_alpha ∩ Z^n| over multi-indices alpha on `index_set` with
/// |alpha| = j, where `count` returns the lattice-point count of the
/// weighted sum with dense coefficients.
Integer ehr_cayley_sum(std::size_t family_size, const IndexSet& index_set, long j,
                       const std::function<Integer(const std::vector<long>&)>& count);

/// Ehrhart counts of the Cayley polytope of the members in `index_set`,
/// computed in dimension n through the weighted-sum identity.
Integer ehr_cayley(const PolytopeFamily& family, const IndexSet& index_set, long j,
                   const EnumOptions& opts = {});

}  // namespace latgenus
