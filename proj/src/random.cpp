#include "latgenus/random.hpp"

#include <algorithm>
#include <limits>

namespace latgenus {

long CaseGenerator::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

LatticePolytope CaseGenerator::polytope(std::size_t n, std::size_t vertex_count, long lo, long hi) {
  std::vector<LatticeVector> pts(vertex_count, LatticeVector(n));
  for (auto& p : pts)
    for (auto& c : p) c = uniform(lo, hi);
  return LatticePolytope::hull(pts, n);
}

PolytopeFamily CaseGenerator::family(const RandomFamilyConfig& cfg) {
  std::size_t n;
  std::size_t k;
  if (cfg.k_equals_n) {
    n = static_cast<std::size_t>(uniform(static_cast<long>(cfg.min_dim),
                                         static_cast<long>(std::min(cfg.max_dim, cfg.max_k))));
    k = n;
  } else {
    n = static_cast<std::size_t>(uniform(static_cast<long>(cfg.min_dim), static_cast<long>(cfg.max_dim)));
    k = static_cast<std::size_t>(uniform(static_cast<long>(cfg.min_k), static_cast<long>(cfg.max_k)));
  }
  std::vector<LatticePolytope> members;
  for (std::size_t i = 0; i < k; ++i) {
    const auto vc = static_cast<std::size_t>(
        uniform(static_cast<long>(cfg.min_vertices), static_cast<long>(cfg.max_vertices)));
    members.push_back(polytope(n, vc, cfg.coord_lo, cfg.coord_hi));
  }
  return PolytopeFamily(n, std::move(members));
}

}  // namespace latgenus
