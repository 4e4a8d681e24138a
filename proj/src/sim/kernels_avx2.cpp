#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <utility>

#include "qnc/sim/kernels.hpp"

namespace qnc::sim {

namespace {

// Two complex values per __m256d: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);
  __m256d b_im = _mm256_permute_pd(b, 0xF);
  __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d broadcast_c(const c64& v) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&v));
}

void apply_1q_avx2(c64* psi, std::size_t dim, int target, const c64* m) {
  if (dim < 4) {
    scalar_kernels().apply_1q(psi, dim, target, m);
    return;
  }
  double* p = reinterpret_cast<double*>(psi);
  const __m256d m00 = broadcast_c(m[0]), m01 = broadcast_c(m[1]);
  const __m256d m10 = broadcast_c(m[2]), m11 = broadcast_c(m[3]);

  if (target == 0) {
    // Amplitude pairs are adjacent: [a0 b0 a1 b1 ...].
    for (std::size_t i = 0; i < dim; i += 4) {
      __m256d v0 = _mm256_loadu_pd(p + 2 * i);
      __m256d v1 = _mm256_loadu_pd(p + 2 * i + 4);
      __m256d a = _mm256_permute2f128_pd(v0, v1, 0x20);
      __m256d b = _mm256_permute2f128_pd(v0, v1, 0x31);
      __m256d na = _mm256_add_pd(cmul(a, m00), cmul(b, m01));
      __m256d nb = _mm256_add_pd(cmul(a, m10), cmul(b, m11));
      _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(na, nb, 0x20));
      _mm256_storeu_pd(p + 2 * i + 4, _mm256_permute2f128_pd(na, nb, 0x31));
    }
    return;
  }

  const std::size_t stride = std::size_t(1) << target;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      __m256d a = _mm256_loadu_pd(p + 2 * i);
      __m256d b = _mm256_loadu_pd(p + 2 * (i + stride));
      __m256d na = _mm256_add_pd(cmul(a, m00), cmul(b, m01));
      __m256d nb = _mm256_add_pd(cmul(a, m10), cmul(b, m11));
      _mm256_storeu_pd(p + 2 * i, na);
      _mm256_storeu_pd(p + 2 * (i + stride), nb);
    }
  }
}

inline void swap_block(c64* a, c64* b, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  double* pb = reinterpret_cast<double*>(b);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * k);
    __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    _mm256_storeu_pd(pa + 2 * k, vb);
    _mm256_storeu_pd(pb + 2 * k, va);
  }
  for (; k < n; ++k) std::swap(a[k], b[k]);
}

void apply_cx_avx2(c64* psi, std::size_t dim, int control, int target) {
  const std::size_t cbit = std::size_t(1) << control;
  const std::size_t tbit = std::size_t(1) << target;
  if (dim < 4) {
    scalar_kernels().apply_cx(psi, dim, control, target);
    return;
  }
  if (target == 0) {
    // Swap adjacent pairs inside each control=1 block.
    double* p = reinterpret_cast<double*>(psi);
    for (std::size_t base = cbit; base < dim; base += 2 * cbit) {
      for (std::size_t i = base; i < base + cbit; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(v, v, 0x01));
      }
    }
    return;
  }
  if (control > target) {
    // Control bit is constant across each target run.
    for (std::size_t base = 0; base < dim; base += 2 * tbit) {
      if (base & cbit) swap_block(psi + base, psi + base + tbit, tbit);
    }
    return;
  }
  if (control == 0) {
    for (std::size_t base = 0; base < dim; base += 2 * tbit) {
      for (std::size_t i = base + 1; i < base + tbit; i += 2)
        std::swap(psi[i], psi[i + tbit]);
    }
    return;
  }
  // 0 < control < target: control=1 sub-runs of length cbit >= 2.
  for (std::size_t base = 0; base < dim; base += 2 * tbit) {
    for (std::size_t s = cbit; s < tbit; s += 2 * cbit)
      swap_block(psi + base + s, psi + base + s + tbit, cbit);
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{apply_1q_avx2, apply_cx_avx2, "avx2"};
  return k;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace qnc::sim

#endif  // x86_64
