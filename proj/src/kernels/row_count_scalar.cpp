#include "latgenus/kernels.hpp"

namespace latgenus::kernels {

std::uint64_t count_row_scalar(const std::int64_t* offset, const std::int64_t* slope,
                               std::size_t n_facets, std::int64_t first, std::int64_t len) {
  std::uint64_t count = 0;
  for (std::int64_t t = first; t < first + len; ++t) {
    bool inside = true;
    for (std::size_t f = 0; f < n_facets; ++f) {
      if (offset[f] + slope[f] * t < 0) {
        inside = false;
        break;
      }
    }
    count += inside ? 1 : 0;
  }
  return count;
}

}  // namespace latgenus::kernels
