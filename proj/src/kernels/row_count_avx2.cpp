// Compiled with -mavx2; only reached through the runtime dispatcher after a
// CPU feature check.

#include <immintrin.h>

#include <vector>

#include "latgenus/kernels.hpp"

namespace latgenus::kernels {

namespace {
struct alignas(32) Lanes {
  __m256i v;
};
}  // namespace

std::uint64_t count_row_avx2(const std::int64_t* offset, const std::int64_t* slope,
                             std::size_t n_facets, std::int64_t first, std::int64_t len) {
  const std::int64_t blocks = len / 4;
  std::uint64_t count = 0;

  if (blocks > 0) {
    // value[f] over lanes t = first, first+1, first+2, first+3, advanced by
    // 4 * slope[f] per block.
    std::vector<Lanes> value(n_facets);
    std::vector<Lanes> step(n_facets);
    for (std::size_t f = 0; f < n_facets; ++f) {
      const std::int64_t v0 = offset[f] + slope[f] * first;
      value[f].v = _mm256_set_epi64x(v0 + 3 * slope[f], v0 + 2 * slope[f], v0 + slope[f], v0);
      step[f].v = _mm256_set1_epi64x(4 * slope[f]);
    }

    const __m256i minus_one = _mm256_set1_epi64x(-1);
    for (std::int64_t b = 0; b < blocks; ++b) {
      __m256i inside = _mm256_set1_epi64x(-1);
      for (std::size_t f = 0; f < n_facets; ++f) {
        inside = _mm256_and_si256(inside, _mm256_cmpgt_epi64(value[f].v, minus_one));
        value[f].v = _mm256_add_epi64(value[f].v, step[f].v);
      }
      const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(inside));
      count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
  }

  const std::int64_t done = blocks * 4;
  if (done < len) count += count_row_scalar(offset, slope, n_facets, first + done, len - done);
  return count;
}

}  // namespace latgenus::kernels
