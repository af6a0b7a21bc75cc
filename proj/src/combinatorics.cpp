#include "latgenus/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace latgenus {

Integer gbinom(const Integer& x, long q) {
  if (q < 0) return 0;
  Integer r;
  // GMP extends C(x, q) to negative x by the falling-factorial definition.
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
  return r;
}

bool check_binom1(long a, long b, long q, long w) {
  if (a < 0 || b < 0) throw DomainError("check_binom1 requires a, b >= 0");
  Integer lhs = 0;
  const long lo = std::max(-q, -w);
  const long hi = std::min(a - q, b - w);
  for (long s = lo; s <= hi; ++s) lhs += gbinom(a, q + s) * gbinom(b, w + s);
  return lhs == gbinom(a + b, a - q + w);
}

bool check_binom2(long a, long b, long q) {
  if (a < 0) throw DomainError("check_binom2 requires a >= 0");
  Integer lhs = 0;
  for (long s = 0; s <= a; ++s) lhs += pow_neg_one(s) * gbinom(a, s) * gbinom(b + s, q);
  return lhs == pow_neg_one(a) * gbinom(b, q - a);
}

MultiIndex::MultiIndex(IndexSet index_set, std::vector<long> parts)
    : index_set_(std::move(index_set)), parts_(std::move(parts)) {
  if (index_set_.size() != parts_.size())
    throw DimensionMismatch("MultiIndex: index set and parts differ in length");
  if (!std::is_sorted(index_set_.begin(), index_set_.end()) ||
      std::adjacent_find(index_set_.begin(), index_set_.end()) != index_set_.end())
    throw DomainError("MultiIndex: index set must be strictly increasing");
  if (std::any_of(parts_.begin(), parts_.end(), [](long v) { return v < 0; }))
    throw DomainError("MultiIndex: parts must be nonnegative");
}

long MultiIndex::part(std::size_t i) const {
  auto it = std::lower_bound(index_set_.begin(), index_set_.end(), i);
  if (it == index_set_.end() || *it != i) return 0;
  return parts_[static_cast<std::size_t>(it - index_set_.begin())];
}

long MultiIndex::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

IndexSet MultiIndex::support() const {
  IndexSet s;
  for (std::size_t j = 0; j < parts_.size(); ++j)
    if (parts_[j] != 0) s.push_back(index_set_[j]);
  return s;
}

std::vector<long> MultiIndex::dense(std::size_t k) const {
  std::vector<long> d(k, 0);
  for (std::size_t j = 0; j < index_set_.size(); ++j) {
    if (index_set_[j] >= k) throw IndexError("MultiIndex: index outside the family");
    d[index_set_[j]] = parts_[j];
  }
  return d;
}

std::vector<IndexSet> subsets(std::size_t k) {
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t size = 0; size <= k; ++size) {
    // Lexicographic combinations of {0..k-1} of the given size.
    IndexSet cur(size);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
      out.push_back(cur);
      std::size_t pos = size;
      while (pos > 0 && cur[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++cur[pos - 1];
      for (std::size_t j = pos; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

std::vector<MultiIndex> compositions(const IndexSet& index_set, long j) {
  std::vector<MultiIndex> out;
  if (j < 0) return out;
  const std::size_t m = index_set.size();
  if (m == 0) {
    if (j == 0) out.emplace_back();
    return out;
  }
  std::vector<long> parts(m, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long remaining) {
    if (pos + 1 == m) {
      parts[pos] = remaining;
      out.emplace_back(index_set, parts);
      return;
    }
    for (long v = remaining; v >= 0; --v) {
      parts[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, j);
  return out;
}

std::vector<MultiIndex> bounded_multiindices(const IndexSet& index_set, long p) {
  std::vector<MultiIndex> out;
  if (index_set.empty()) {
    out.emplace_back();
    return out;
  }
  for (long total = 0; total <= p; ++total) {
    auto layer = compositions(index_set, total);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace latgenus
