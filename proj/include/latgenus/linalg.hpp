#pragma once

// Small exact linear algebra over Z and Q: ranks, unimodular column
// reduction, primitive vectors.

#include <cstddef>
#include <vector>

#include "latgenus/arith.hpp"

namespace latgenus {

/// Row-major integer matrix. Every row has the same length.
using IntMatrix = std::vector<LatticeVector>;

IntMatrix identity_matrix(std::size_t n);

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
LatticeVector make_primitive(LatticeVector v);

/// Rank over Q of the given row vectors (all of length `cols`).
std::size_t rational_rank(const IntMatrix& rows, std::size_t cols);

/// Result of reducing an integer matrix D (m x n) by unimodular column
/// operations: D * transform = [H | 0] where H has `rank` nonzero columns of
/// full column rank. `inverse` is transform^{-1}, also integral.
///
/// The first `rank` rows of `inverse` form a basis of the saturated lattice
/// span_Q(rows of D) ∩ Z^n, and for x in that lattice the first `rank`
/// coordinates of x * transform are its coordinates in that basis.
struct ColumnReduction {
  std::size_t rank = 0;
  IntMatrix transform;
  IntMatrix inverse;
};

ColumnReduction column_reduce(const IntMatrix& rows, std::size_t cols);

/// Solves M x = rhs over Q for square invertible M; throws DomainError if M
/// is singular.
std::vector<Rational> solve_rational(const IntMatrix& m, const LatticeVector& rhs);

}  // namespace latgenus
