#include "latgenus/mixed.hpp"

#include <algorithm>
#include <functional>

namespace latgenus {

FamilyCounter::FamilyCounter(PolytopeFamily family, EnumOptions opts)
    : family_(std::move(family)), opts_(opts) {}

FamilyCounter::Entry& FamilyCounter::entry_locked(const std::vector<long>& coefficients) const {
  auto it = cache_.find(coefficients);
  if (it == cache_.end()) {
    Entry e;
    e.polytope = std::make_unique<const LatticePolytope>(weighted_sum(family_, coefficients));
    it = cache_.emplace(coefficients, std::move(e)).first;
  }
  return it->second;
}

const LatticePolytope& FamilyCounter::polytope(const std::vector<long>& coefficients) const {
  std::lock_guard lock(mu_);
  return *entry_locked(coefficients).polytope;
}

Integer FamilyCounter::count(const std::vector<long>& coefficients) const {
  std::lock_guard lock(mu_);
  Entry& e = entry_locked(coefficients);
  if (!e.count) e.count = std::make_unique<const Integer>(to_integer(count_lattice_points(*e.polytope, opts_)));
  return *e.count;
}

Integer FamilyCounter::interior_count(const std::vector<long>& coefficients) const {
  std::lock_guard lock(mu_);
  Entry& e = entry_locked(coefficients);
  if (!e.interior)
    e.interior =
        std::make_unique<const Integer>(to_integer(count_interior_lattice_points(*e.polytope, opts_)));
  return *e.interior;
}

std::vector<long> FamilyCounter::indicator(const IndexSet& index_set, long scale) const {
  std::vector<long> c(family_.size(), 0);
  for (auto i : index_set) {
    if (i >= c.size()) throw IndexError("indicator: index outside the family");
    c[i] = scale;
  }
  return c;
}

std::size_t FamilyCounter::cached_entries() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

namespace {

Integer dmv_at_scale(const FamilyCounter& counter, long m) {
  const long k = static_cast<long>(counter.size());
  Integer total = 0;
  for (const auto& subset : subsets(counter.size()))
    total += pow_neg_one(k - static_cast<long>(subset.size())) * counter.count(counter.indicator(subset, m));
  return total;
}

Integer integral_value(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw Error(std::string(what) + " is not an integer: " + fraction_string(q));
  return q.get_num();
}

}  // namespace

Integer dmv(const FamilyCounter& counter) { return dmv_at_scale(counter, 1); }

Integer dmv(const PolytopeFamily& family, const EnumOptions& opts) {
  return dmv(FamilyCounter(family, opts));
}

RationalPolynomial mixed_ehrhart(const FamilyCounter& counter) {
  // Each ehr(P_I) has degree at most n, so n + 1 nodes determine ME.
  const long n = static_cast<long>(counter.ambient_dim());
  std::vector<long> nodes;
  std::vector<Rational> values;
  for (long m = 0; m <= n; ++m) {
    nodes.push_back(m);
    values.emplace_back(dmv_at_scale(counter, m));
  }
  return RationalPolynomial::interpolate(nodes, values);
}

RationalPolynomial mixed_ehrhart(const PolytopeFamily& family, const EnumOptions& opts) {
  return mixed_ehrhart(FamilyCounter(family, opts));
}

Integer motivic_genus(const FamilyCounter& counter) { return dmv(counter); }

Integer khovanskii_genus_me(const FamilyCounter& counter) {
  return integral_value(ehr_eval(mixed_ehrhart(counter), -1), "ME(-1)");
}

Integer kgenus_interior_sum(const FamilyCounter& counter) {
  Integer total = 0;
  for (const auto& subset : subsets(counter.size())) {
    const auto c = counter.indicator(subset);
    const long d = static_cast<long>(counter.polytope(c).dim());
    total += pow_neg_one(d - static_cast<long>(subset.size())) * counter.interior_count(c);
  }
  return total;
}

Integer reciprocity_interior_sum(const FamilyCounter& counter) {
  const long k = static_cast<long>(counter.size());
  Integer total = 0;
  for (const auto& subset : subsets(counter.size())) {
    const auto c = counter.indicator(subset);
    const long d = static_cast<long>(counter.polytope(c).dim());
    total += pow_neg_one(k - static_cast<long>(subset.size()) + d) * counter.interior_count(c);
  }
  return total;
}

Integer normalized_mixed_volume(const FamilyCounter& counter) {
  const std::size_t n = counter.ambient_dim();
  if (counter.size() != n)
    throw ContractError("normalized_mixed_volume needs as many polytopes as the ambient dimension");
  // Polarization: the alternating sum of volumes is already normalized, it
  // evaluates to n! vol(P) on the diagonal P_1 = ... = P_n = P.
  Rational total = 0;
  for (const auto& subset : subsets(n)) {
    const LatticePolytope& p = counter.polytope(counter.indicator(subset));
    if (p.dim() < n) continue;
    const Rational vol = relative_volume(p);
    if ((n - subset.size()) % 2 == 0) {
      total += vol;
    } else {
      total -= vol;
    }
  }
  return integral_value(canonical(total), "normalized mixed volume");
}

Integer normalized_mixed_volume(const PolytopeFamily& family) {
  return normalized_mixed_volume(FamilyCounter(family));
}

bool has_independent_segments(const PolytopeFamily& family) {
  const std::size_t n = family.ambient_dim();
  const std::size_t k = family.size();
  if (k > n) return false;

  // Directions between vertices span the same space as directions between
  // any lattice points of P_i, so by Rado's theorem an independent
  // transversal exists for one choice iff it exists for the other.
  std::vector<std::vector<LatticeVector>> directions(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& verts = family[i].vertices();
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        LatticeVector d(n);
        for (std::size_t t = 0; t < n; ++t) d[t] = verts[b][t] - verts[a][t];
        d = make_primitive(std::move(d));
        // Fix the sign so that d and -d coincide.
        auto lead = std::find_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; });
        if (lead != d.end() && *lead < 0)
          for (auto& x : d) x = -x;
        directions[i].push_back(std::move(d));
      }
    }
    std::sort(directions[i].begin(), directions[i].end());
    directions[i].erase(std::unique(directions[i].begin(), directions[i].end()), directions[i].end());
    if (directions[i].empty()) return false;
  }

  // Members with few directions first keep the search tree narrow.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return directions[a].size() < directions[b].size();
  });

  IntMatrix chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == k) return true;
    for (const auto& d : directions[order[depth]]) {
      chosen.push_back(d);
      if (rational_rank(chosen, n) == chosen.size() && search(depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

GenusReport genus_report(const FamilyCounter& counter) {
  GenusReport r;
  r.dmv = dmv(counter);
  r.mixed_ehrhart = mixed_ehrhart(counter);
  r.motivic_genus = integral_value(ehr_eval(r.mixed_ehrhart, 1), "ME(1)");
  r.khovanskii_me = integral_value(ehr_eval(r.mixed_ehrhart, -1), "ME(-1)");
  r.kgenus_interior_sum = kgenus_interior_sum(counter);
  r.signed_khovanskii_me = pow_neg_one(static_cast<long>(counter.ambient_dim())) * r.khovanskii_me;
  return r;
}

}  // namespace latgenus
