#include <cstdlib>
#include <cstring>

#include "qnc/sim/kernels.hpp"

namespace qnc::sim {

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("QNC_SIMD");
#if defined(__x86_64__) || defined(_M_X64)
    if (env && std::strcmp(env, "avx2") == 0) return &avx2_kernels();
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    if (cpu_has_avx2()) return &avx2_kernels();
#else
    (void)env;
#endif
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace qnc::sim
