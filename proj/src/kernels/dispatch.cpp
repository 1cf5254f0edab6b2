#include <cstdlib>
#include <string_view>

#include "optocav/kernels.hpp"

namespace optocav::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend& active() {
  static const Backend& chosen = [] () -> const Backend& {
    const char* env = std::getenv("OPTOCAV_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar::backend();
    if (avx2::compiled() && cpu_has_avx2()) return avx2::backend();
    return scalar::backend();
  }();
  return chosen;
}

}  // namespace optocav::kernels
