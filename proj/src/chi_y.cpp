#include "latgenus/chi_y.hpp"

namespace latgenus {

Integer chi_y_closed(const FamilyCounter& counter, long p) {
  if (p < 0) throw DomainError("chi_y_closed: p must be nonnegative");
  const long n = static_cast<long>(counter.ambient_dim());
  const std::size_t k = counter.size();
  Integer total = 0;
  for (const auto& subset : subsets(k)) {
    const long size = static_cast<long>(subset.size());
    Integer inner = 0;
    for (const auto& beta : bounded_multiindices(subset, p)) {
      const Integer binom = gbinom(n + size, p - beta.total());
      if (binom == 0) continue;
      // P_I + P_beta = sum over i in I of (1 + beta_i) P_i.
      std::vector<long> c(k, 0);
      for (std::size_t j = 0; j < subset.size(); ++j) c[subset[j]] = 1 + beta.parts()[j];
      inner += pow_neg_one(beta.total()) * binom * counter.count(c);
    }
    total += pow_neg_one(size) * inner;
  }
  return pow_neg_one(n - p) * total;
}

ChiYProfile chi_y_profile(const FamilyCounter& counter) {
  ChiYProfile profile;
  profile.n = counter.ambient_dim();
  profile.k = counter.size();
  for (long p = 0; p <= static_cast<long>(profile.n); ++p) profile.values.push_back(chi_y_closed(counter, p));
  return profile;
}

Integer keylemma_e(long d, const std::function<Integer(long)>& ehr_q, long p) {
  if (d < 1) throw DomainError("keylemma_e: ambient torus dimension must be positive");
  Integer sum = gbinom(d, p + 1);
  const long last = p + 1;
  for (long j = 0; j <= last + 2; ++j) {
    const Integer binom = gbinom(d, d - p + j - 1);
    if (j > last) {
      if (binom != 0) throw Error("keylemma_e: truncation bound violated");
      continue;
    }
    if (binom == 0) continue;
    sum += pow_neg_one(j + 1) * binom * ehr_q(j);
  }
  return pow_neg_one(d - 1 - p) * sum;
}

Integer chi_y_cayley(const FamilyCounter& counter, long p) {
  if (p < 0) throw DomainError("chi_y_cayley: p must be nonnegative");
  const long n = static_cast<long>(counter.ambient_dim());
  const std::size_t k = counter.size();
  const long shifted = p + static_cast<long>(k) - 1;
  const auto count = [&](const std::vector<long>& c) { return counter.count(c); };

  // e^{p+k-1,+} of the Cayley-trick hypersurface, stratum by stratum.
  Integer hypersurface = 0;
  for (const auto& subset : subsets(k)) {
    if (subset.empty()) continue;
    const long d = n + static_cast<long>(subset.size());
    hypersurface += keylemma_e(
        d, [&](long j) { return ehr_cayley_sum(k, subset, j, count); }, shifted);
  }
  return pow_neg_one(n - p) * gbinom(n, p) - hypersurface;
}

}  // namespace latgenus
