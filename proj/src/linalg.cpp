#include "latgenus/linalg.hpp"

#include <utility>

namespace latgenus {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, LatticeVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vector lengths differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector make_primitive(LatticeVector v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return v;
  }
  if (g == 0) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::size_t rational_rank(const IntMatrix& rows, std::size_t cols) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("rational_rank: ragged rows");
    m.emplace_back(r.begin(), r.end());
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Column operation col_a -= q * col_b on `rows` and `transform`, with the
// matching row operation row_b += q * row_a on `inverse`.
void subtract_column(IntMatrix& rows, ColumnReduction& red, std::size_t a, std::size_t b,
                     const Integer& q) {
  for (auto& r : rows) r[a] -= q * r[b];
  for (auto& r : red.transform) r[a] -= q * r[b];
  auto& inv = red.inverse;
  for (std::size_t j = 0; j < inv[b].size(); ++j) inv[b][j] += q * inv[a][j];
}

void swap_columns(IntMatrix& rows, ColumnReduction& red, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& r : rows) std::swap(r[a], r[b]);
  for (auto& r : red.transform) std::swap(r[a], r[b]);
  std::swap(red.inverse[a], red.inverse[b]);
}

}  // namespace

ColumnReduction column_reduce(const IntMatrix& input, std::size_t cols) {
  IntMatrix rows = input;
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionMismatch("column_reduce: ragged rows");
  ColumnReduction red;
  red.transform = identity_matrix(cols);
  red.inverse = identity_matrix(cols);

  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size() && rank < cols; ++i) {
    // Euclid across columns rank..cols-1 of row i until one nonzero remains.
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = rank; c < cols; ++c) {
        if (rows[i][c] == 0) continue;
        if (best == cols || abs(rows[i][c]) < abs(rows[i][best])) best = c;
      }
      if (best == cols) break;
      swap_columns(rows, red, rank, best);
      bool done = true;
      for (std::size_t c = rank + 1; c < cols; ++c) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[i][rank].get_mpz_t());
        subtract_column(rows, red, c, rank, q);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[i][rank] != 0) ++rank;
  }
  red.rank = rank;
  return red;
}

std::vector<Rational> solve_rational(const IntMatrix& m, const LatticeVector& rhs) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("solve_rational: matrix not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = rhs.at(i);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("solve_rational: singular matrix");
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace latgenus
