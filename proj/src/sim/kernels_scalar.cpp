#include <utility>

#include "qnc/sim/kernels.hpp"

namespace qnc::sim {

namespace {

void apply_1q_scalar(c64* psi, std::size_t dim, int target, const c64* m) {
  const std::size_t stride = std::size_t(1) << target;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const c64 a = psi[i];
      const c64 b = psi[i + stride];
      psi[i] = m[0] * a + m[1] * b;
      psi[i + stride] = m[2] * a + m[3] * b;
    }
  }
}

void apply_cx_scalar(c64* psi, std::size_t dim, int control, int target) {
  const std::size_t cbit = std::size_t(1) << control;
  const std::size_t tbit = std::size_t(1) << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(psi[i], psi[i | tbit]);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{apply_1q_scalar, apply_cx_scalar, "scalar"};
  return k;
}

}  // namespace qnc::sim
