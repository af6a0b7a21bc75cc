#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "latgenus/mixed.hpp"
#include "latgenus/random.hpp"
#include "oracle.hpp"

using namespace latgenus;

namespace {

LatticePolytope hull_of(std::initializer_list<std::initializer_list<long>> pts, std::size_t n) {
  std::vector<LatticeVector> v;
  for (auto p : pts) v.push_back(make_vector(p));
  return LatticePolytope::hull(v, n);
}

const LatticePolytope kSimplex = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
const LatticePolytope kSquare = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
const LatticePolytope kT3 = hull_of({{0, 0}, {3, 0}, {0, 3}}, 2);
const LatticePolytope kUnit1 = hull_of({{0}, {1}}, 1);

PolytopeFamily triangle_and_segment(long a) {
  return PolytopeFamily(3, {hull_of({{0, 0, 0}, {a, 0, 0}, {0, a, 0}}, 3), hull_of({{0, 0, 1}, {1, 0, 1}}, 3)});
}

// DMV from brute-force counts of the vertex-sum point sets.
long oracle_dmv(const PolytopeFamily& fam) {
  const std::size_t k = fam.size();
  long total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<LatticeVector> pts{LatticeVector(fam.ambient_dim(), 0)};
    int size = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) {
        pts = oracle::sums(pts, fam[i].vertices());
        ++size;
      }
    const long c = oracle::count_points(pts);
    total += ((static_cast<int>(k) - size) % 2 == 0) ? c : -c;
  }
  return total;
}

// Exhaustive transversal search over all lattice-point differences.
bool oracle_segments(const PolytopeFamily& fam) {
  const std::size_t n = fam.ambient_dim();
  if (fam.size() > n) return false;  // more than n vectors are never independent
  std::vector<std::vector<LatticeVector>> diffs(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::vector<LatticeVector> pts;
    oracle::for_each_box_point(fam[i].vertices(), [&](const LatticeVector& x) {
      if (oracle::in_hull(fam[i].vertices(), x)) pts.push_back(x);
    });
    for (const auto& a : pts)
      for (const auto& b : pts)
        if (a != b) {
          LatticeVector d(n);
          for (std::size_t t = 0; t < n; ++t) d[t] = b[t] - a[t];
          diffs[i].push_back(d);
        }
    std::sort(diffs[i].begin(), diffs[i].end());
    diffs[i].erase(std::unique(diffs[i].begin(), diffs[i].end()), diffs[i].end());
  }
  IntMatrix chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == fam.size()) return true;
    for (const auto& d : diffs[i]) {
      chosen.push_back(d);
      const bool ok = rational_rank(chosen, n) == chosen.size() && rec(i + 1);
      chosen.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("dmv examples") {
  CHECK(dmv(PolytopeFamily(2, {kSquare})) == 3);
  CHECK(dmv(PolytopeFamily(2, {kSimplex, kSimplex})) == 1);
  CHECK(dmv(PolytopeFamily(1, {kUnit1, kUnit1})) == 0);
  CHECK(dmv(PolytopeFamily(2, {LatticePolytope::origin(2), hull_of({{3, 1}}, 2)})) == 0);
}

TEST_CASE("mixed Ehrhart polynomial examples") {
  const FamilyCounter sq(PolytopeFamily(2, {kSquare}));
  CHECK(mixed_ehrhart(sq).coefficients() == std::vector<Rational>{0, 2, 1});
  CHECK(khovanskii_genus_me(sq) == -1);
  CHECK(kgenus_interior_sum(sq) == 1);
  CHECK(motivic_genus(sq) == 3);

  const FamilyCounter t3(PolytopeFamily(2, {kT3}));
  CHECK(motivic_genus(t3) == 9);
  CHECK(khovanskii_genus_me(t3) == 0);
  CHECK(kgenus_interior_sum(t3) == 0);

  const FamilyCounter ex(triangle_and_segment(6));
  CHECK(mixed_ehrhart(ex).coefficients() == std::vector<Rational>{0, 0, 6});
  CHECK(motivic_genus(ex) == 6);
  CHECK(khovanskii_genus_me(ex) == 6);
  CHECK(kgenus_interior_sum(ex) == 6);
  const GenusReport r = genus_report(ex);
  CHECK(r.signed_khovanskii_me == -6);
  CHECK(r.motivic_genus == r.dmv);
}

TEST_CASE("the triangle-and-segment example against the brute-force oracle") {
  // ME(m) at m = 0..3 from brute-force counts, then checked against 6 m^2.
  const PolytopeFamily base = triangle_and_segment(6);
  for (long m = 0; m <= 3; ++m) {
    std::vector<LatticePolytope> scaled;
    for (const auto& p : base.polytopes()) scaled.push_back(dilate(p, m));
    const long v = oracle_dmv(PolytopeFamily(3, scaled));
    CHECK(v == 6 * m * m);
  }
  // Interior sum 1 - 10 + 0 + 15 from oracle interior counts.
  const auto& p1 = base[0].vertices();
  const auto& p2 = base[1].vertices();
  CHECK(oracle::count_interior_points(p1) == 10);
  CHECK(oracle::count_interior_points(p2) == 0);
  CHECK(oracle::count_interior_points(oracle::sums(p1, p2)) == 15);
}

TEST_CASE("normalized mixed volume") {
  const LatticePolytope sx = hull_of({{0, 0}, {1, 0}}, 2);
  const LatticePolytope sy = hull_of({{0, 0}, {0, 1}}, 2);
  CHECK(normalized_mixed_volume(PolytopeFamily(2, {sx, sy})) == 1);
  CHECK(normalized_mixed_volume(PolytopeFamily(2, {kSimplex, kSimplex})) == 1);
  CHECK(normalized_mixed_volume(PolytopeFamily(2, {kSquare, kSquare})) == 2);
  CHECK(dmv(PolytopeFamily(2, {kSquare, kSquare})) == 2);
  CHECK(normalized_mixed_volume(PolytopeFamily(2, {kT3, kT3})) == 9);
  CHECK_THROWS_AS(normalized_mixed_volume(PolytopeFamily(2, {kSquare})), ContractError);
}

TEST_CASE("independent segments") {
  CHECK_FALSE(has_independent_segments(PolytopeFamily(2, {kSquare, LatticePolytope::origin(2)})));
  CHECK(has_independent_segments(PolytopeFamily(2, {kSimplex, kSimplex})));
  CHECK_FALSE(has_independent_segments(PolytopeFamily(1, {kUnit1, kUnit1})));
  CHECK_FALSE(has_independent_segments(PolytopeFamily(2, {kSquare, kSquare, kSquare})));
}

TEST_CASE("dmv and segments against oracles on random families") {
  // Brute-force hulls of k-fold vertex sums get expensive quickly, so
  // three members only in the plane.
  CaseGenerator gen(51);
  RandomFamilyConfig plane;
  plane.max_dim = 2;
  plane.max_k = 3;
  plane.coord_lo = -1;
  plane.coord_hi = 1;
  plane.max_vertices = 3;
  RandomFamilyConfig space = plane;
  space.min_dim = 3;
  space.max_dim = 3;
  space.max_k = 2;
  for (int t = 0; t < 60; ++t) {
    const PolytopeFamily fam = gen.family(t % 2 ? space : plane);
    CAPTURE(t);
    const long d = oracle_dmv(fam);
    CHECK(dmv(fam) == d);
    CHECK(d >= 0);
    CHECK(has_independent_segments(fam) == oracle_segments(fam));
    CHECK((d > 0) == has_independent_segments(fam));
  }
}

TEST_CASE("dmv symmetries") {
  CaseGenerator gen(52);
  std::mt19937_64 rng(52);
  RandomFamilyConfig cfg;
  cfg.max_dim = 3;
  cfg.max_k = 3;
  for (int t = 0; t < 60; ++t) {
    const PolytopeFamily fam = gen.family(cfg);
    const Integer base = dmv(fam);
    const std::size_t n = fam.ambient_dim();

    std::vector<LatticePolytope> perm = fam.polytopes();
    std::reverse(perm.begin(), perm.end());
    CHECK(dmv(PolytopeFamily(n, perm)) == base);

    std::vector<LatticePolytope> moved;
    const IntMatrix u = oracle::random_unimodular(n, rng);
    for (const auto& p : fam.polytopes()) {
      LatticeVector shift(n);
      for (auto& c : shift) c = gen.uniform(-4, 4);
      moved.push_back(translate(p, shift));
    }
    CHECK(dmv(PolytopeFamily(n, moved)) == base);
    for (auto& p : moved) p = linear_image(p, u);
    CHECK(dmv(PolytopeFamily(n, moved)) == base);
  }
}

TEST_CASE("genus identities on random families") {
  CaseGenerator gen(53);
  RandomFamilyConfig cfg;
  cfg.max_dim = 3;
  cfg.max_k = 3;
  for (int t = 0; t < 80; ++t) {
    const FamilyCounter c(gen.family(cfg));
    const RationalPolynomial me = mixed_ehrhart(c);
    CHECK(me.degree() <= static_cast<long>(c.ambient_dim()));
    CHECK(ehr_eval(me, 0) == 0);
    CHECK(ehr_eval(me, 1) == Rational(dmv(c)));
    CHECK(khovanskii_genus_me(c) == reciprocity_interior_sum(c));
    CHECK(kgenus_interior_sum(c) == pow_neg_one(static_cast<long>(c.size())) * khovanskii_genus_me(c));
  }
}

TEST_CASE("shared counter gives the same values from several threads") {
  CaseGenerator gen(54);
  RandomFamilyConfig cfg;
  cfg.max_dim = 3;
  cfg.max_k = 3;
  cfg.min_k = 3;
  const PolytopeFamily fam = gen.family(cfg);
  const Integer expected = dmv(fam);
  const FamilyCounter shared(fam);
  std::vector<Integer> got(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) threads.emplace_back([&, i] { got[i] = dmv(shared); });
  for (auto& th : threads) th.join();
  for (const auto& g : got) CHECK(g == expected);
  CHECK(shared.cached_entries() == 8);
}
