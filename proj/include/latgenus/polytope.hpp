#pragma once

// Exact lattice polytopes: hulls, Minkowski sums, dilates, lattice-point
// enumeration, relative volumes, Cayley and pyramid constructions.
//
// Every nonempty polytope carries a lattice chart: an affine bijection between
// the lattice points of its affine hull and Z^dim. Facets and enumeration
// live in chart coordinates, so lower-dimensional polytopes are counted and
// measured natively against their induced lattice.

#include <cstddef>
#include <vector>

#include "latgenus/arith.hpp"
#include "latgenus/combinatorics.hpp"
#include "latgenus/linalg.hpp"

namespace latgenus {

/// Affine lattice chart of an affine subspace A of R^n with dim r.
/// to_chart(x) = (x - base) * into   (n x r matrix)
/// lift(y)     = base + y * out      (r x n matrix)
/// x lies in A iff (x - base) * normal_space == 0  (n x (n - r) matrix).
struct LatticeChart {
  LatticeVector base;
  IntMatrix into;
  IntMatrix out;
  IntMatrix normal_space;

  std::size_t ambient_dim() const { return base.size(); }
  std::size_t dim() const { return out.size(); }

  bool in_affine_hull(const LatticeVector& x) const;
  LatticeVector to_chart(const LatticeVector& x) const;
  LatticeVector lift(const LatticeVector& y) const;
};

/// Half-space normal . y + offset >= 0 in chart coordinates. The normal is
/// primitive and points inward.
struct Facet {
  LatticeVector normal;
  Integer offset;

  Integer evaluate(const LatticeVector& y) const { return dot(normal, y) + offset; }
  bool operator==(const Facet&) const = default;
};

class LatticePolytope {
 public:
  /// Convex hull of integer points; an empty point list gives the empty
  /// polytope.
  static LatticePolytope hull(const std::vector<LatticeVector>& points, std::size_t ambient_dim);
  static LatticePolytope empty(std::size_t ambient_dim);
  static LatticePolytope origin(std::size_t ambient_dim);

  LatticePolytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  bool is_empty() const { return vertices_.empty(); }
  /// Affine dimension; 0 for the empty polytope as well (check is_empty()).
  std::size_t dim() const { return chart_.dim(); }

  /// Extreme points in lexicographic order.
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const LatticeChart& chart() const { return chart_; }

  bool contains(const LatticeVector& x) const;
  bool contains_in_relative_interior(const LatticeVector& x) const;

  bool operator==(const LatticePolytope& other) const {
    return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
  }

 private:
  friend LatticePolytope dilate(const LatticePolytope& p, long m);

  std::size_t ambient_dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Facet> facets_;
  LatticeChart chart_;
};

/// Nonempty list of polytopes sharing one ambient dimension.
class PolytopeFamily {
 public:
  PolytopeFamily(std::size_t ambient_dim, std::vector<LatticePolytope> polytopes);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return polytopes_.size(); }
  const LatticePolytope& operator[](std::size_t i) const { return polytopes_.at(i); }
  const std::vector<LatticePolytope>& polytopes() const { return polytopes_; }

 private:
  std::size_t ambient_dim_;
  std::vector<LatticePolytope> polytopes_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// m-fold dilate; m = 0 gives the origin polytope. Negative m is a
/// DomainError.
LatticePolytope dilate(const LatticePolytope& p, long m);

LatticePolytope translate(const LatticePolytope& p, const LatticeVector& shift);

/// Image under x -> x * u for an integer n x n matrix u.
LatticePolytope linear_image(const LatticePolytope& p, const IntMatrix& u);

/// Sum over i of alpha_i P_i; alpha = 0 gives the origin polytope.
LatticePolytope weighted_sum(const PolytopeFamily& family, const MultiIndex& alpha);
/// Same with dense coefficients (one per family member).
LatticePolytope weighted_sum(const PolytopeFamily& family, const std::vector<long>& coefficients);

std::uint64_t count_lattice_points(const LatticePolytope& p, const EnumOptions& opts = {});
std::uint64_t count_interior_lattice_points(const LatticePolytope& p, const EnumOptions& opts = {});

/// All lattice points in lexicographic order of their chart coordinates.
std::vector<LatticeVector> lattice_points(const LatticePolytope& p, const EnumOptions& opts = {});

/// Volume of the chart image, normalized so the unit cell of the induced
/// lattice has volume 1; a point has volume 1. Empty polytopes have volume 0.
Rational relative_volume(const LatticePolytope& p);

/// Cayley polytope of the members indexed by `index_set`: vertices (v, e_j)
/// for v a vertex of the j-th member of the set, in R^{n + |I|}.
LatticePolytope cayley(const PolytopeFamily& family, const IndexSet& index_set);

/// conv(Q x {0}, (0, ..., 0, 1)).
LatticePolytope pyramid_over(const LatticePolytope& q);

struct LatticeProjection {
  LatticePolytope polytope;
  LatticeChart map;
};

/// Full-dimensional copy of p in R^{dim p} together with the chart that
/// carries p's lattice points onto it.
LatticeProjection lattice_projection(const LatticePolytope& p);

/// Bounding box of the chart image of p, as (low, high) per chart axis.
std::vector<std::pair<Integer, Integer>> chart_bounding_box(const LatticePolytope& p);

}  // namespace latgenus
