#pragma once

// Row kernels for lattice-point enumeration.
//
// A row is the line of candidate points obtained by fixing every chart
// coordinate but the last one, t. Facet f restricted to the row reads
// offset[f] + slope[f] * t >= 0. The kernels count the integers t in
// [first, first + len) satisfying all inequalities at once.
//
// Callers guarantee |offset[f]| + |slope[f]| * max(|first|, |first + len|)
// stays below 2^62, so no intermediate value overflows int64.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace latgenus::kernels {

enum class Isa { scalar, avx2 };

using RowCountFn = std::uint64_t (*)(const std::int64_t* offset, const std::int64_t* slope,
                                     std::size_t n_facets, std::int64_t first, std::int64_t len);

std::uint64_t count_row_scalar(const std::int64_t* offset, const std::int64_t* slope,
                               std::size_t n_facets, std::int64_t first, std::int64_t len);

#if defined(LATGENUS_HAVE_AVX2_KERNEL)
std::uint64_t count_row_avx2(const std::int64_t* offset, const std::int64_t* slope,
                             std::size_t n_facets, std::int64_t first, std::int64_t len);
#endif

/// True when the AVX2 kernel was compiled in and the running CPU supports it.
bool avx2_available();

/// The ISA used by enumeration: AVX2 when available, unless overridden by
/// force_isa() or the environment variable LATGENUS_KERNEL=scalar.
Isa selected_isa();

/// Pins the kernel choice (std::nullopt restores automatic selection).
/// Requesting avx2 on a machine without it falls back to scalar.
void force_isa(std::optional<Isa> isa);

RowCountFn row_counter(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace latgenus::kernels
