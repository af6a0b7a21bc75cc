#include "latgenus/polytope.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>

#include "latgenus/kernels.hpp"

namespace latgenus {

// ---------------------------------------------------------------------------
// Charts

bool LatticeChart::in_affine_hull(const LatticeVector& x) const {
  if (x.size() != base.size()) return false;
  const std::size_t n = base.size();
  const std::size_t c = n - dim();
  for (std::size_t col = 0; col < c; ++col) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (x[i] - base[i]) * normal_space[i][col];
    if (s != 0) return false;
  }
  return true;
}

LatticeVector LatticeChart::to_chart(const LatticeVector& x) const {
  if (x.size() != base.size()) throw DimensionMismatch("to_chart: wrong point length");
  const std::size_t n = base.size();
  const std::size_t r = dim();
  LatticeVector y(r, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = x[i] - base[i];
    if (d == 0) continue;
    for (std::size_t j = 0; j < r; ++j) y[j] += d * into[i][j];
  }
  return y;
}

LatticeVector LatticeChart::lift(const LatticeVector& y) const {
  if (y.size() != dim()) throw DimensionMismatch("lift: wrong chart point length");
  LatticeVector x = base;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * out[j][i];
  }
  return x;
}

namespace {

// Full-dimensional sets get the identity chart so facets read directly in
// ambient coordinates.
LatticeChart build_chart(const std::vector<LatticeVector>& pts, std::size_t n) {
  LatticeChart chart;
  const LatticeVector& p0 = pts.front();
  IntMatrix diffs;
  diffs.reserve(pts.size());
  for (const auto& p : pts) {
    LatticeVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = p[i] - p0[i];
    diffs.push_back(std::move(d));
  }
  ColumnReduction red = column_reduce(diffs, n);
  const std::size_t r = red.rank;
  if (r == n) {
    chart.base = LatticeVector(n, Integer(0));
    chart.into = identity_matrix(n);
    chart.out = identity_matrix(n);
    chart.normal_space = IntMatrix(n);
    return chart;
  }
  chart.base = p0;
  chart.into.assign(n, LatticeVector(r));
  chart.normal_space.assign(n, LatticeVector(n - r));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) chart.into[i][j] = red.transform[i][j];
    for (std::size_t j = r; j < n; ++j) chart.normal_space[i][j - r] = red.transform[i][j];
  }
  chart.out.assign(red.inverse.begin(), red.inverse.begin() + static_cast<std::ptrdiff_t>(r));
  return chart;
}

// ---------------------------------------------------------------------------
// Facets by the double description method on the homogenized cone
//   { z in R^{r+1} : z . (y_i, 1) >= 0 for all i },
// whose extreme rays are exactly the facet inequalities of conv(y_i) when the
// points span R^r affinely.

class TightSet {
 public:
  explicit TightSet(std::size_t n_bits) : words_((n_bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  TightSet intersect(const TightSet& o) const {
    TightSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const TightSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  LatticeVector z;
  TightSet tight;
};

std::vector<Facet> compute_facets(const std::vector<LatticeVector>& pts, std::size_t r) {
  if (r == 0) return {};
  const std::size_t n_pts = pts.size();
  IntMatrix homog;
  homog.reserve(n_pts);
  for (const auto& y : pts) {
    LatticeVector h = y;
    h.emplace_back(1);
    homog.push_back(std::move(h));
  }

  std::vector<std::size_t> basis;
  IntMatrix basis_rows;
  for (std::size_t i = 0; i < n_pts && basis.size() < r + 1; ++i) {
    basis_rows.push_back(homog[i]);
    if (rational_rank(basis_rows, r + 1) == basis_rows.size()) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() != r + 1) throw Error("compute_facets: points do not span their chart");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= r; ++j) {
    LatticeVector e(r + 1, Integer(0));
    e[j] = 1;
    std::vector<Rational> x = solve_rational(basis_rows, e);
    Integer den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    LatticeVector z(r + 1);
    for (std::size_t t = 0; t <= r; ++t) z[t] = Integer(x[t] * den);
    Ray ray{make_primitive(std::move(z)), TightSet(n_pts)};
    for (std::size_t l = 0; l <= r; ++l)
      if (l != j) ray.tight.set(basis[l]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(n_pts, false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t i = 0; i < n_pts; ++i) {
    if (in_basis[i]) continue;
    const LatticeVector& h = homog[i];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t t = 0; t < rays.size(); ++t) {
      value[t] = dot(rays[t].z, h);
      const int s = sgn(value[t]);
      if (s > 0) pos.push_back(t);
      if (s < 0) neg.push_back(t);
    }
    if (neg.empty()) {
      for (std::size_t t = 0; t < rays.size(); ++t)
        if (value[t] == 0) rays[t].tight.set(i);
      continue;
    }

    std::vector<Ray> created;
    for (auto p : pos) {
      for (auto q : neg) {
        TightSet common = rays[p].tight.intersect(rays[q].tight);
        if (common.count() + 1 < r) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.subset_of(rays[t].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector z(r + 1);
        const Integer& vp = value[p];
        const Integer vq = -value[q];
        for (std::size_t c = 0; c <= r; ++c) z[c] = vp * rays[q].z[c] + vq * rays[p].z[c];
        common.set(i);
        created.push_back(Ray{make_primitive(std::move(z)), std::move(common)});
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (std::size_t t = 0; t < rays.size(); ++t) {
      if (value[t] < 0) continue;
      if (value[t] == 0) rays[t].tight.set(i);
      next.push_back(std::move(rays[t]));
    }
    for (auto& c : created) next.push_back(std::move(c));
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (auto& ray : rays) {
    Facet f;
    f.offset = ray.z[r];
    ray.z.pop_back();
    f.normal = std::move(ray.z);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  return facets;
}

void check_lengths(const std::vector<LatticeVector>& points, std::size_t n) {
  for (const auto& p : points)
    if (p.size() != n)
      throw DimensionMismatch("point of length " + std::to_string(p.size()) +
                              " in ambient dimension " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolytope

LatticePolytope LatticePolytope::empty(std::size_t ambient_dim) {
  LatticePolytope p;
  p.ambient_dim_ = ambient_dim;
  return p;
}

LatticePolytope LatticePolytope::origin(std::size_t ambient_dim) {
  return hull({LatticeVector(ambient_dim, Integer(0))}, ambient_dim);
}

LatticePolytope LatticePolytope::hull(const std::vector<LatticeVector>& input, std::size_t n) {
  check_lengths(input, n);
  if (input.empty()) return empty(n);

  std::vector<LatticeVector> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  poly.ambient_dim_ = n;
  poly.chart_ = build_chart(pts, n);
  const std::size_t r = poly.chart_.dim();

  std::vector<LatticeVector> chart_pts;
  chart_pts.reserve(pts.size());
  for (const auto& p : pts) chart_pts.push_back(poly.chart_.to_chart(p));
  poly.facets_ = compute_facets(chart_pts, r);

  if (r == 0) {
    poly.vertices_ = {pts.front()};
    return poly;
  }
  // A point is a vertex iff the normals of the facets through it span R^r.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntMatrix tight_normals;
    for (const auto& f : poly.facets_)
      if (f.evaluate(chart_pts[i]) == 0) tight_normals.push_back(f.normal);
    if (tight_normals.size() >= r && rational_rank(tight_normals, r) == r)
      poly.vertices_.push_back(pts[i]);
  }
  return poly;
}

bool LatticePolytope::contains(const LatticeVector& x) const {
  if (is_empty() || x.size() != ambient_dim_) return false;
  if (!chart_.in_affine_hull(x)) return false;
  const LatticeVector y = chart_.to_chart(x);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.evaluate(y) >= 0; });
}

bool LatticePolytope::contains_in_relative_interior(const LatticeVector& x) const {
  if (is_empty() || x.size() != ambient_dim_) return false;
  if (!chart_.in_affine_hull(x)) return false;
  const LatticeVector y = chart_.to_chart(x);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.evaluate(y) > 0; });
}

PolytopeFamily::PolytopeFamily(std::size_t ambient_dim, std::vector<LatticePolytope> polytopes)
    : ambient_dim_(ambient_dim), polytopes_(std::move(polytopes)) {
  if (polytopes_.empty()) throw ContractError("a polytope family needs at least one member");
  for (const auto& p : polytopes_)
    if (p.ambient_dim() != ambient_dim_)
      throw DimensionMismatch("family members must share the ambient dimension");
}

// ---------------------------------------------------------------------------
// Constructions

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
  if (p.is_empty() || q.is_empty()) throw EmptyPolytopeError("minkowski_sum with the empty polytope");
  const std::size_t n = p.ambient_dim();
  std::vector<LatticeVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      LatticeVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return LatticePolytope::hull(sums, n);
}

LatticePolytope dilate(const LatticePolytope& p, long m) {
  if (m < 0) throw DomainError("dilate: negative dilation factor");
  if (p.is_empty()) throw EmptyPolytopeError("dilate: empty polytope");
  if (m == 0) return LatticePolytope::origin(p.ambient_dim());
  if (m == 1) return p;
  // Scaling preserves the chart directions, the lexicographic vertex order
  // and the facet normals; only the base point and offsets scale.
  LatticePolytope d = p;
  for (auto& v : d.vertices_)
    for (auto& c : v) c *= m;
  for (auto& c : d.chart_.base) c *= m;
  for (auto& f : d.facets_) f.offset *= m;
  return d;
}

LatticePolytope translate(const LatticePolytope& p, const LatticeVector& shift) {
  if (shift.size() != p.ambient_dim()) throw DimensionMismatch("translate: wrong shift length");
  std::vector<LatticeVector> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  return LatticePolytope::hull(pts, p.ambient_dim());
}

LatticePolytope linear_image(const LatticePolytope& p, const IntMatrix& u) {
  const std::size_t n = p.ambient_dim();
  if (u.size() != n) throw DimensionMismatch("linear_image: matrix has wrong row count");
  const std::size_t m = n == 0 ? 0 : u.front().size();
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices()) {
    LatticeVector w(m, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) w[j] += v[i] * u[i][j];
    pts.push_back(std::move(w));
  }
  return LatticePolytope::hull(pts, m);
}

LatticePolytope weighted_sum(const PolytopeFamily& family, const std::vector<long>& coefficients) {
  if (coefficients.size() != family.size())
    throw IndexError("weighted_sum: coefficient count differs from family size");
  LatticePolytope acc = LatticePolytope::origin(family.ambient_dim());
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 0) throw DomainError("weighted_sum: negative coefficient");
    if (coefficients[i] == 0) continue;
    LatticePolytope term = dilate(family[i], coefficients[i]);
    acc = first ? std::move(term) : minkowski_sum(acc, term);
    first = false;
  }
  return acc;
}

LatticePolytope weighted_sum(const PolytopeFamily& family, const MultiIndex& alpha) {
  return weighted_sum(family, alpha.dense(family.size()));
}

LatticePolytope cayley(const PolytopeFamily& family, const IndexSet& index_set) {
  const std::size_t n = family.ambient_dim();
  const std::size_t m = index_set.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (index_set[j] >= family.size()) throw IndexError("cayley: index outside the family");
    if (j > 0 && index_set[j] <= index_set[j - 1])
      throw DomainError("cayley: index set must be strictly increasing");
  }
  std::vector<LatticeVector> pts;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& v : family[index_set[j]].vertices()) {
      LatticeVector w = v;
      w.resize(n + m, Integer(0));
      w[n + j] = 1;
      pts.push_back(std::move(w));
    }
  }
  return LatticePolytope::hull(pts, n + m);
}

LatticePolytope pyramid_over(const LatticePolytope& q) {
  if (q.is_empty()) throw EmptyPolytopeError("pyramid_over: empty base");
  const std::size_t d = q.ambient_dim();
  std::vector<LatticeVector> pts;
  for (const auto& v : q.vertices()) {
    LatticeVector w = v;
    w.emplace_back(0);
    pts.push_back(std::move(w));
  }
  LatticeVector apex(d + 1, Integer(0));
  apex[d] = 1;
  pts.push_back(std::move(apex));
  return LatticePolytope::hull(pts, d + 1);
}

LatticeProjection lattice_projection(const LatticePolytope& p) {
  if (p.is_empty()) throw EmptyPolytopeError("lattice_projection: empty polytope");
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(p.chart().to_chart(v));
  return LatticeProjection{LatticePolytope::hull(pts, p.dim()), p.chart()};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::pair<Integer, Integer>> chart_bounding_box(const LatticePolytope& p) {
  std::vector<std::pair<Integer, Integer>> box;
  if (p.is_empty()) return box;
  const std::size_t r = p.dim();
  bool first = true;
  for (const auto& v : p.vertices()) {
    const LatticeVector y = p.chart().to_chart(v);
    if (first) {
      for (std::size_t j = 0; j < r; ++j) box.emplace_back(y[j], y[j]);
      first = false;
      continue;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] < box[j].first) box[j].first = y[j];
      if (y[j] > box[j].second) box[j].second = y[j];
    }
  }
  return box;
}

namespace {

Integer box_volume(const std::vector<std::pair<Integer, Integer>>& box) {
  Integer total = 1;
  for (const auto& [lo, hi] : box) total *= hi - lo + 1;
  return total;
}

void enforce_budget(const std::vector<std::pair<Integer, Integer>>& box, const EnumOptions& opts) {
  Integer total = box_volume(box);
  if (total > to_integer(opts.max_candidates))
    throw BudgetExceeded(std::move(total), opts.max_candidates);
}

constexpr std::int64_t kSafeMagnitude = std::int64_t{1} << 60;

// Whether every row evaluation fits comfortably in int64.
bool fits_machine_words(const std::vector<Facet>& facets,
                        const std::vector<std::pair<Integer, Integer>>& box) {
  for (const auto& [lo, hi] : box)
    if (abs(lo) + 8 >= kSafeMagnitude || abs(hi) + 8 >= kSafeMagnitude) return false;
  const Integer limit = to_integer(static_cast<std::uint64_t>(kSafeMagnitude));
  for (const auto& f : facets) {
    Integer bound = abs(f.offset) + 1;
    for (std::size_t j = 0; j < box.size(); ++j) {
      const Integer reach = std::max(abs(box[j].first), abs(box[j].second)) + 8;
      bound += abs(f.normal[j]) * reach;
    }
    if (bound >= limit) return false;
  }
  return true;
}

// Counts chart points of the box satisfying normal . y + offset - shift >= 0
// for all facets, with shift 0 (closed) or 1 (relative interior).
std::uint64_t count_machine(const std::vector<Facet>& facets,
                            const std::vector<std::pair<Integer, Integer>>& box, long shift) {
  const std::size_t r = box.size();
  const std::size_t nf = facets.size();
  const std::size_t last = r - 1;

  std::vector<std::int64_t> lo(r), hi(r);
  for (std::size_t j = 0; j < r; ++j) {
    lo[j] = box[j].first.get_si();
    hi[j] = box[j].second.get_si();
  }
  // coeff[j * nf + f] = normal_f[j]
  std::vector<std::int64_t> coeff(r * nf);
  std::vector<std::int64_t> row_offset(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    std::int64_t base = facets[f].offset.get_si() - shift;
    for (std::size_t j = 0; j < r; ++j) {
      coeff[j * nf + f] = facets[f].normal[j].get_si();
      if (j != last) base += coeff[j * nf + f] * lo[j];
    }
    row_offset[f] = base;
  }
  const std::int64_t* slope = coeff.data() + last * nf;
  const kernels::RowCountFn count_row = kernels::row_counter(kernels::selected_isa());
  const std::int64_t row_len = hi[last] - lo[last] + 1;

  std::vector<std::int64_t> y(lo.begin(), lo.end());
  std::uint64_t total = 0;
  while (true) {
    total += count_row(row_offset.data(), slope, nf, lo[last], row_len);
    // Odometer over the prefix coordinates 0..r-2.
    std::size_t j = last;
    while (j > 0) {
      --j;
      const std::int64_t* cj = coeff.data() + j * nf;
      if (y[j] < hi[j]) {
        ++y[j];
        for (std::size_t f = 0; f < nf; ++f) row_offset[f] += cj[f];
        break;
      }
      const std::int64_t span = hi[j] - lo[j];
      y[j] = lo[j];
      for (std::size_t f = 0; f < nf; ++f) row_offset[f] -= cj[f] * span;
      if (j == 0) return total;
    }
    if (last == 0) return total;
  }
}

// Arbitrary-precision fallback that also serves lattice_points().
template <class Visit>
void visit_exact(const std::vector<Facet>& facets,
                 const std::vector<std::pair<Integer, Integer>>& box, long shift, Visit&& visit) {
  const std::size_t r = box.size();
  LatticeVector y(r);
  for (std::size_t j = 0; j < r; ++j) y[j] = box[j].first;
  while (true) {
    bool inside = true;
    for (const auto& f : facets) {
      if (f.evaluate(y) - shift < 0) {
        inside = false;
        break;
      }
    }
    if (inside) visit(y);
    std::size_t j = r;
    while (j > 0) {
      --j;
      if (y[j] < box[j].second) {
        ++y[j];
        break;
      }
      y[j] = box[j].first;
      if (j == 0) return;
    }
  }
}

std::uint64_t count_points(const LatticePolytope& p, long shift, const EnumOptions& opts) {
  if (p.is_empty()) return 0;
  if (p.dim() == 0) return 1;
  const auto box = chart_bounding_box(p);
  enforce_budget(box, opts);
  if (fits_machine_words(p.facets(), box)) return count_machine(p.facets(), box, shift);
  std::uint64_t total = 0;
  visit_exact(p.facets(), box, shift, [&](const LatticeVector&) { ++total; });
  return total;
}

}  // namespace

std::uint64_t count_lattice_points(const LatticePolytope& p, const EnumOptions& opts) {
  return count_points(p, 0, opts);
}

std::uint64_t count_interior_lattice_points(const LatticePolytope& p, const EnumOptions& opts) {
  return count_points(p, 1, opts);
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p, const EnumOptions& opts) {
  std::vector<LatticeVector> pts;
  if (p.is_empty()) return pts;
  if (p.dim() == 0) return {p.vertices().front()};
  const auto box = chart_bounding_box(p);
  enforce_budget(box, opts);
  visit_exact(p.facets(), box, 0, [&](const LatticeVector& y) { pts.push_back(p.chart().lift(y)); });
  return pts;
}

// ---------------------------------------------------------------------------
// Volume: cone over the facets from a vertex c. With primitive facet normal
// a, the pyramid over facet F has volume (a.c + b) * relvol(F) / r, since the
// lattice distance a.c + b and the covolume |a| of the facet lattice cancel
// the Euclidean normalization.

Rational relative_volume(const LatticePolytope& p) {
  if (p.is_empty()) return 0;
  const std::size_t r = p.dim();
  if (r == 0) return 1;
  std::vector<LatticeVector> chart_vertices;
  for (const auto& v : p.vertices()) chart_vertices.push_back(p.chart().to_chart(v));
  const LatticeVector& apex = chart_vertices.front();

  Rational vol = 0;
  for (const auto& f : p.facets()) {
    const Integer height = f.evaluate(apex);
    if (height == 0) continue;
    std::vector<LatticeVector> on_facet;
    for (const auto& y : chart_vertices)
      if (f.evaluate(y) == 0) on_facet.push_back(y);
    const LatticePolytope facet = LatticePolytope::hull(on_facet, r);
    vol += Rational(height) * relative_volume(facet);
  }
  vol /= static_cast<long>(r);
  return canonical(vol);
}

}  // namespace latgenus
