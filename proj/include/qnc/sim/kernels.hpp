#pragma once

#include <complex>
#include <cstddef>

namespace qnc::sim {

using c64 = std::complex<double>;

/// Dense statevector gate kernels. Basis convention: qubit 0 is the least
/// significant bit of the amplitude index (fixed project-wide; the oracle
/// builds on it).
///
/// apply_1q: psi <- (m ⊗ I) psi on the target wire, m row-major 2x2.
/// apply_cx: psi <- CX(control, target) psi.
struct Kernels {
  void (*apply_1q)(c64* psi, std::size_t dim, int target, const c64* m);
  void (*apply_cx)(c64* psi, std::size_t dim, int control, int target);
  const char* name;
};

const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
bool cpu_has_avx2();
#endif

/// Best kernel set for this machine, chosen once at first use. The
/// QNC_SIMD environment variable ("scalar" or "avx2") overrides detection.
const Kernels& active_kernels();

}  // namespace qnc::sim
