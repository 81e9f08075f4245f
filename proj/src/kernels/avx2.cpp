// Copyright 2026 The isinggate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a cpuid check.

#include <immintrin.h>

#include <cmath>
#include <vector>

#include "kernels_impl.hpp"

namespace isinggate::kernels::detail {

namespace {

// (a0, a1) * (b0, b1) for two interleaved complex numbers per register.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// Interval between exact re-evaluations of the phasors in phasor_sum.
constexpr std::size_t kReseedInterval = 64;

}  // namespace

void cmatmul8_avx2(const cplx* a, const cplx* b, cplx* c) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (int j = 0; j < 8; ++j) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    for (int k = 0; k < 8; ++k) {
      const __m256d br = _mm256_broadcast_sd(bd + 2 * (j * 8 + k));
      const __m256d bi = _mm256_broadcast_sd(bd + 2 * (j * 8 + k) + 1);
      const double* col = ad + 16 * k;
      const __m256d a0 = _mm256_loadu_pd(col);
      const __m256d a1 = _mm256_loadu_pd(col + 4);
      const __m256d a2 = _mm256_loadu_pd(col + 8);
      const __m256d a3 = _mm256_loadu_pd(col + 12);
      acc0 = _mm256_add_pd(acc0, _mm256_fmaddsub_pd(a0, br, _mm256_mul_pd(_mm256_permute_pd(a0, 0x5), bi)));
      acc1 = _mm256_add_pd(acc1, _mm256_fmaddsub_pd(a1, br, _mm256_mul_pd(_mm256_permute_pd(a1, 0x5), bi)));
      acc2 = _mm256_add_pd(acc2, _mm256_fmaddsub_pd(a2, br, _mm256_mul_pd(_mm256_permute_pd(a2, 0x5), bi)));
      acc3 = _mm256_add_pd(acc3, _mm256_fmaddsub_pd(a3, br, _mm256_mul_pd(_mm256_permute_pd(a3, 0x5), bi)));
    }
    double* out = cd + 16 * j;
    _mm256_storeu_pd(out, acc0);
    _mm256_storeu_pd(out + 4, acc1);
    _mm256_storeu_pd(out + 8, acc2);
    _mm256_storeu_pd(out + 12, acc3);
  }
}

// Phasor recurrence z <- z * exp(i omega dt), two terms per register, with an
// exact reseed every kReseedInterval points to bound the accumulated rounding.
void phasor_sum_avx2(const cplx* amp, const double* omega, std::size_t terms, double decay,
                     double dt, std::size_t points, cplx* out) {
  const std::size_t pairs = (terms + 1) / 2;
  std::vector<double> z(4 * pairs, 0.0), w(4 * pairs, 0.0);
  auto seed = [&](std::size_t n) {
    const double t = static_cast<double>(n) * dt;
    for (std::size_t p = 0; p < terms; ++p) {
      const cplx v = amp[p] * std::polar(1.0, omega[p] * t);
      z[2 * p] = v.real();
      z[2 * p + 1] = v.imag();
    }
  };
  for (std::size_t p = 0; p < terms; ++p) {
    const cplx v = std::polar(1.0, omega[p] * dt);
    w[2 * p] = v.real();
    w[2 * p + 1] = v.imag();
  }

  for (std::size_t n = 0; n < points; ++n) {
    if (n % kReseedInterval == 0) seed(n);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t q = 0; q < pairs; ++q) {
      const __m256d zq = _mm256_loadu_pd(z.data() + 4 * q);
      acc = _mm256_add_pd(acc, zq);
      _mm256_storeu_pd(z.data() + 4 * q, cmul(zq, _mm256_loadu_pd(w.data() + 4 * q)));
    }
    const __m128d sum = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double s[2];
    _mm_store_pd(s, sum);
    const double damp = std::exp(-decay * static_cast<double>(n) * dt);
    out[n] = cplx(s[0] * damp, s[1] * damp);
  }
}

// Four lanes (four control amplitudes) per register.
void flow_distances_avx2(const double* step_soa, std::size_t lanes, const double* x0,
                         const double* target, std::size_t steps, double* out) {
  const std::size_t full = lanes - lanes % 4;
  const __m256d t0 = _mm256_set1_pd(target[0]);
  const __m256d t1 = _mm256_set1_pd(target[1]);
  const __m256d t2 = _mm256_set1_pd(target[2]);
  for (std::size_t l = 0; l < full; l += 4) {
    __m256d m[16];
    for (int e = 0; e < 16; ++e) m[e] = _mm256_loadu_pd(step_soa + e * lanes + l);
    __m256d x[4];
    for (int r = 0; r < 4; ++r) x[r] = _mm256_set1_pd(x0[r]);
    alignas(32) double d[4];
    for (std::size_t n = 0;; ++n) {
      const __m256d dx = _mm256_sub_pd(x[0], t0);
      const __m256d hy =
          _mm256_sqrt_pd(_mm256_fmadd_pd(x[1], x[1], _mm256_mul_pd(x[2], x[2])));
      const __m256d dy = _mm256_sub_pd(hy, t1);
      const __m256d dz = _mm256_sub_pd(x[3], t2);
      const __m256d d2 =
          _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz)));
      _mm256_store_pd(d, _mm256_sqrt_pd(d2));
      for (int i = 0; i < 4; ++i) out[(l + i) * (steps + 1) + n] = d[i];
      if (n == steps) break;
      __m256d y[4];
      for (int r = 0; r < 4; ++r) {
        y[r] = _mm256_mul_pd(m[4 * r], x[0]);
        y[r] = _mm256_fmadd_pd(m[4 * r + 1], x[1], y[r]);
        y[r] = _mm256_fmadd_pd(m[4 * r + 2], x[2], y[r]);
        y[r] = _mm256_fmadd_pd(m[4 * r + 3], x[3], y[r]);
      }
      for (int r = 0; r < 4; ++r) x[r] = y[r];
    }
  }
  if (full == lanes) return;

  const std::size_t tail = lanes - full;
  std::vector<double> soa(16 * tail);
  for (int e = 0; e < 16; ++e)
    for (std::size_t i = 0; i < tail; ++i) soa[e * tail + i] = step_soa[e * lanes + full + i];
  flow_distances_scalar(soa.data(), tail, x0, target, steps, out + full * (steps + 1));
}

}  // namespace isinggate::kernels::detail
