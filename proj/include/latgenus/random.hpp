#pragma once

// Seeded generation of random lattice polytopes and families.
//
// The bit stream is std::mt19937_64, whose output sequence is fixed by the
// C++ standard; integers in a range are drawn by rejection sampling rather
// than std::uniform_int_distribution (whose algorithm is unspecified), so a
// seed yields the same cases on every platform.

#include <cstdint>
#include <random>

#include "latgenus/polytope.hpp"

namespace latgenus {

struct RandomFamilyConfig {
  std::size_t min_dim = 1;
  std::size_t max_dim = 2;
  std::size_t min_k = 1;
  std::size_t max_k = 2;
  long coord_lo = -2;
  long coord_hi = 2;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 4;
  /// Draw k = n (then min_k/max_k are ignored and n <= max_k is enforced).
  bool k_equals_n = false;
};

class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

  LatticePolytope polytope(std::size_t n, std::size_t vertex_count, long lo, long hi);
  PolytopeFamily family(const RandomFamilyConfig& cfg);

 private:
  std::mt19937_64 engine_;
};

}  // namespace latgenus
