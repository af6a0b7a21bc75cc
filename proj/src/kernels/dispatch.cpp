#include <atomic>
#include <cstdlib>
#include <cstring>

#include "latgenus/kernels.hpp"

namespace latgenus::kernels {

namespace {

// -1: automatic, otherwise static_cast<int>(Isa).
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() {
#if defined(LATGENUS_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool env_forces_scalar() {
  const char* env = std::getenv("LATGENUS_KERNEL");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

}  // namespace

bool avx2_available() {
  static const bool has = cpu_has_avx2();
  return has;
}

Isa selected_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto isa = static_cast<Isa>(forced);
    return (isa == Isa::avx2 && !avx2_available()) ? Isa::scalar : isa;
  }
  static const bool scalar_env = env_forces_scalar();
  return (avx2_available() && !scalar_env) ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

RowCountFn row_counter(Isa isa) {
#if defined(LATGENUS_HAVE_AVX2_KERNEL)
  if (isa == Isa::avx2 && avx2_available()) return &count_row_avx2;
#endif
  (void)isa;
  return &count_row_scalar;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

}  // namespace latgenus::kernels
