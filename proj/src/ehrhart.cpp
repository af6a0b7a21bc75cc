#include "latgenus/ehrhart.hpp"

namespace latgenus {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<long>& nodes,
                                                   const std::vector<Rational>& values) {
  if (nodes.size() != values.size()) throw DimensionMismatch("interpolate: node/value mismatch");
  const std::size_t n = nodes.size();
  std::vector<Rational> result(n, Rational(0));
  // Lagrange basis polynomials expanded in the monomial basis.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (nodes[j] == nodes[i]) throw DomainError("interpolate: repeated node");
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * nodes[j];
      }
      basis = std::move(next);
      denom *= nodes[i] - nodes[j];
    }
    const Rational scale = values[i] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  return RationalPolynomial(std::move(result));
}

Rational RationalPolynomial::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return canonical(acc);
}

std::vector<std::string> RationalPolynomial::fraction_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(fraction_string(c));
  return out;
}

Rational ehr_eval(const RationalPolynomial& poly, long m) { return poly(Rational(m)); }

RationalPolynomial ehrhart_polynomial(const LatticePolytope& p, const EnumOptions& opts) {
  if (p.is_empty()) throw EmptyPolytopeError("ehrhart_polynomial: empty polytope");
  const long d = static_cast<long>(p.dim());
  std::vector<long> nodes;
  std::vector<Rational> values;
  for (long m = 0; m <= d; ++m) {
    nodes.push_back(m);
    values.emplace_back(to_integer(count_lattice_points(dilate(p, m), opts)));
  }
  return RationalPolynomial::interpolate(nodes, values);
}

HStarVector h_star_from_counts(std::size_t dim, const std::vector<Integer>& counts) {
  if (counts.size() < dim + 1) throw DomainError("h_star_from_counts: need counts for j = 0..dim");
  HStarVector h(dim + 1);
  const long d1 = static_cast<long>(dim) + 1;
  for (std::size_t k = 0; k <= dim; ++k) {
    Integer s = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const long e = static_cast<long>(k - j);
      s += pow_neg_one(e) * gbinom(d1, e) * counts[j];
    }
    h[k] = s;
  }
  return h;
}

HStarVector h_star(const LatticePolytope& p, const EnumOptions& opts) {
  if (p.is_empty()) throw EmptyPolytopeError("h_star: empty polytope");
  std::vector<Integer> counts;
  for (std::size_t j = 0; j <= p.dim(); ++j)
    counts.push_back(to_integer(count_lattice_points(dilate(p, static_cast<long>(j)), opts)));
  return h_star_from_counts(p.dim(), counts);
}

Integer interior_via_reciprocity(const LatticePolytope& p, const EnumOptions& opts) {
  const Rational v = ehr_eval(ehrhart_polynomial(p, opts), -1);
  if (v.get_den() != 1) throw Error("Ehrhart polynomial took a non-integral value at -1");
  return pow_neg_one(static_cast<long>(p.dim())) * v.get_num();
}

Integer ehr_cayley_sum(std::size_t family_size, const IndexSet& index_set, long j,
                       const std::function<Integer(const std::vector<long>&)>& count) {
  if (index_set.empty()) throw DomainError("ehr_cayley: index set must be nonempty");
  if (j < 0) throw DomainError("ehr_cayley: negative dilation");
  Integer total = 0;
  for (const auto& alpha : compositions(index_set, j)) total += count(alpha.dense(family_size));
  return total;
}

Integer ehr_cayley(const PolytopeFamily& family, const IndexSet& index_set, long j,
                   const EnumOptions& opts) {
  return ehr_cayley_sum(family.size(), index_set, j, [&](const std::vector<long>& c) {
    return to_integer(count_lattice_points(weighted_sum(family, c), opts));
  });
}

}  // namespace latgenus
