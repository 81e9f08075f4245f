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

#include <cmath>

#include "kernels_impl.hpp"

namespace isinggate::kernels::detail {

void cmatmul8_scalar(const cplx* a, const cplx* b, cplx* c) {
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < 8; ++k) acc += a[k * 8 + i] * b[j * 8 + k];
      c[j * 8 + i] = acc;
    }
  }
}

// Direct evaluation, one complex exponential per (point, term).
void phasor_sum_scalar(const cplx* amp, const double* omega, std::size_t terms, double decay,
                       double dt, std::size_t points, cplx* out) {
  for (std::size_t n = 0; n < points; ++n) {
    const double t = static_cast<double>(n) * dt;
    cplx acc = 0.0;
    for (std::size_t p = 0; p < terms; ++p) acc += amp[p] * std::polar(1.0, omega[p] * t);
    out[n] = acc * std::exp(-decay * t);
  }
}

void flow_distances_scalar(const double* step_soa, std::size_t lanes, const double* x0,
                           const double* target, std::size_t steps, double* out) {
  for (std::size_t l = 0; l < lanes; ++l) {
    double m[16];
    for (int e = 0; e < 16; ++e) m[e] = step_soa[e * lanes + l];
    double x[4] = {x0[0], x0[1], x0[2], x0[3]};
    double* row = out + l * (steps + 1);
    for (std::size_t n = 0;; ++n) {
      const double dx = x[0] - target[0];
      const double dy = std::sqrt(x[1] * x[1] + x[2] * x[2]) - target[1];
      const double dz = x[3] - target[2];
      row[n] = std::sqrt(dx * dx + dy * dy + dz * dz);
      if (n == steps) break;
      double y[4];
      for (int r = 0; r < 4; ++r)
        y[r] = m[4 * r] * x[0] + m[4 * r + 1] * x[1] + m[4 * r + 2] * x[2] + m[4 * r + 3] * x[3];
      for (int r = 0; r < 4; ++r) x[r] = y[r];
    }
  }
}

}  // namespace isinggate::kernels::detail
