#pragma once

// Generalized binomial coefficients, the two summation identities the chi_y
// derivation relies on, and deterministic iterators over index sets.
//
// Family members are addressed by 0-based index throughout the library.

#include <cstddef>
#include <vector>

#include "latgenus/arith.hpp"

namespace latgenus {

/// Sorted, duplicate-free subset of {0, ..., k-1}.
using IndexSet = std::vector<std::size_t>;

/// x(x-1)...(x-q+1)/q! for q >= 0 and any integer x; 0 for q < 0.
Integer gbinom(const Integer& x, long q);
inline Integer gbinom(long x, long q) { return gbinom(Integer(x), q); }

/// Sum over s in Z of C(a, q+s) C(b, w+s) compared against C(a+b, a-q+w).
/// Requires a, b >= 0. Only s with 0 <= q+s <= a and 0 <= w+s <= b can
/// contribute, so the sum runs over max(-q,-w) <= s <= min(a-q, b-w).
bool check_binom1(long a, long b, long q, long w);

/// Sum over s >= 0 of (-1)^s C(a, s) C(b+s, q) compared against
/// (-1)^a C(b, q-a). Requires a >= 0; C(a, s) = 0 for s > a, so the sum
/// stops at s = a.
bool check_binom2(long a, long b, long q);

/// A nonnegative integer vector indexed by a subset I of the family.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(IndexSet index_set, std::vector<long> parts);

  const IndexSet& index_set() const { return index_set_; }
  const std::vector<long>& parts() const { return parts_; }

  /// Part for family index i, 0 when i is outside the index set.
  long part(std::size_t i) const;
  long total() const;
  IndexSet support() const;

  /// Parts spread over 0..k-1 (zeros outside the index set).
  std::vector<long> dense(std::size_t k) const;

  bool operator==(const MultiIndex&) const = default;

 private:
  IndexSet index_set_;
  std::vector<long> parts_;
};

/// All subsets of {0..k-1}, ordered by size and then lexicographically.
std::vector<IndexSet> subsets(std::size_t k);

/// All multi-indices on `index_set` with total exactly j, in lexicographic
/// order of the parts vector (largest first part first). For an empty index
/// set this is the single empty multi-index when j == 0 and nothing otherwise.
std::vector<MultiIndex> compositions(const IndexSet& index_set, long j);

/// All multi-indices on `index_set` with total at most p, grouped by total
/// (0, 1, ..., p) and lexicographic within each total.
std::vector<MultiIndex> bounded_multiindices(const IndexSet& index_set, long p);

}  // namespace latgenus
