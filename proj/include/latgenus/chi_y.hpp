#pragma once

// chi_y-characteristics e^{p,+}(Y) of the generic complete intersection
// Y ⊂ (C*)^n cut out by Laurent polynomials with Newton polytopes P_1..P_k.
//
// Two independent routes:
//  * closed:  (-1)^{n-p} sum_I (-1)^{|I|} sum_{|beta|<=p} (-1)^{|beta|}
//             C(n+|I|, p-|beta|) |(P_I + P_beta) ∩ Z^n|
//  * cayley:  (-1)^{n-p} C(n,p) - sum_{I != ∅} e^{p+k-1,+}(Z_I), where Z_I is
//             the generic hypersurface of a lattice pyramid over the Cayley
//             polytope C_I, evaluated by keylemma_e from the Ehrhart
//             counts of C_I.
// They share the memoized counts of the FamilyCounter and must agree exactly.

#include <functional>
#include <vector>

#include "latgenus/mixed.hpp"

namespace latgenus {

struct ChiYProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Integer> values;  // e^{p,+} for p = 0..n
};

Integer chi_y_closed(const FamilyCounter& counter, long p);

ChiYProfile chi_y_profile(const FamilyCounter& counter);

/// e^{p,+} of the generic hypersurface in (C*)^d of a lattice pyramid over Q:
///   (-1)^{d-1-p} ( C(d, p+1) + sum_{j>=0} (-1)^{j+1} C(d, d-p+j-1) ehr(Q; j) ).
/// C(d, d-p+j-1) vanishes unless p+1-d <= j <= p+1, so ehr_q is only queried
/// there; the two terms past j = p+1 are checked to vanish.
Integer keylemma_e(long d, const std::function<Integer(long)>& ehr_q, long p);

Integer chi_y_cayley(const FamilyCounter& counter, long p);

}  // namespace latgenus
