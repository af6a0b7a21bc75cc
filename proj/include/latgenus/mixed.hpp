#pragma once

// Discrete mixed volume, the mixed Ehrhart polynomial, the two arithmetic
// genus quantities, the k = n mixed-volume identity and the independent
// segments criterion.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "latgenus/ehrhart.hpp"
#include "latgenus/polytope.hpp"

namespace latgenus {

/// Memoized lattice-point data of the weighted sums sum_i c_i P_i of one
/// family, keyed by the dense coefficient vector c. Each entry is computed
/// once and never changes; lookups are safe from several threads.
class FamilyCounter {
 public:
  explicit FamilyCounter(PolytopeFamily family, EnumOptions opts = {});

  const PolytopeFamily& family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  std::size_t ambient_dim() const { return family_.ambient_dim(); }
  const EnumOptions& options() const { return opts_; }

  const LatticePolytope& polytope(const std::vector<long>& coefficients) const;
  Integer count(const std::vector<long>& coefficients) const;
  Integer interior_count(const std::vector<long>& coefficients) const;

  /// Coefficient vector with `scale` on the members of I and 0 elsewhere.
  std::vector<long> indicator(const IndexSet& index_set, long scale = 1) const;

  /// Number of distinct weighted sums materialized so far.
  std::size_t cached_entries() const;

 private:
  struct Entry {
    std::unique_ptr<const LatticePolytope> polytope;
    std::unique_ptr<const Integer> count;
    std::unique_ptr<const Integer> interior;
  };
  Entry& entry_locked(const std::vector<long>& coefficients) const;

  PolytopeFamily family_;
  EnumOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<long>, Entry> cache_;
};

/// sum over I ⊆ [k] of (-1)^{k-|I|} |P_I ∩ Z^n| with P_∅ = {0}.
Integer dmv(const FamilyCounter& counter);
Integer dmv(const PolytopeFamily& family, const EnumOptions& opts = {});

/// Interpolates m -> DMV(mP_1, ..., mP_k) on m = 0..n.
RationalPolynomial mixed_ehrhart(const FamilyCounter& counter);
RationalPolynomial mixed_ehrhart(const PolytopeFamily& family, const EnumOptions& opts = {});

/// The motivic arithmetic genus of the generic complete intersection: DMV.
Integer motivic_genus(const FamilyCounter& counter);

/// ME(P_1, ..., P_k; -1).
Integer khovanskii_genus_me(const FamilyCounter& counter);

/// sum over I of (-1)^{dim(P_I) - |I|} |relint(P_I) ∩ Z^n|, with the origin
/// polytope contributing 1.
Integer kgenus_interior_sum(const FamilyCounter& counter);

/// sum over I of (-1)^{k-|I|} ehr(P_I; -1) expanded through reciprocity:
/// (-1)^{k-|I|} (-1)^{dim P_I} |relint(P_I) ∩ Z^n|. Equals ME(-1).
Integer reciprocity_interior_sum(const FamilyCounter& counter);

/// sum over I ⊆ [n] of (-1)^{n-|I|} vol_n(P_I), the mixed volume normalized
/// so that P_1 = ... = P_n = P gives n! vol(P). Requires k = n.
Integer normalized_mixed_volume(const FamilyCounter& counter);
Integer normalized_mixed_volume(const PolytopeFamily& family);

/// Whether segments S_i ⊆ P_i with lattice endpoints and linearly
/// independent directions exist.
bool has_independent_segments(const PolytopeFamily& family);

/// Everything the genus report exposes, side by side.
struct GenusReport {
  Integer dmv;
  RationalPolynomial mixed_ehrhart;
  Integer motivic_genus;         // ME(1)
  Integer khovanskii_me;         // ME(-1)
  Integer kgenus_interior_sum;   // interior-count sum
  Integer signed_khovanskii_me;  // (-1)^n ME(-1)
};

GenusReport genus_report(const FamilyCounter& counter);

}  // namespace latgenus
