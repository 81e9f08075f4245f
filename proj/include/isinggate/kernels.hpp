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

#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference and, on
// x86-64, an AVX2/FMA variant; the variant is picked once at first use from
// cpuid. Setting ISINGGATE_SIMD=off in the environment forces the scalar
// table.

#include <complex>
#include <cstddef>
#include <string_view>

namespace isinggate::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// c = a * b for column-major 8x8 complex matrices. c must not alias a or b.
  void (*cmatmul8)(const cplx* a, const cplx* b, cplx* c);

  /// out[n] = sum_p amp[p] * exp((i*omega[p] - decay) * n * dt), n in [0, points).
  void (*phasor_sum)(const cplx* amp, const double* omega, std::size_t terms, double decay,
                     double dt, std::size_t points, cplx* out);

  /// Iterates x_{n+1} = M_l x_n for each lane l from the shared x0 and records
  /// the Euclidean distance between the sphere image (x1, hypot(x2, x3), x4)
  /// and target[0..2]. step_soa holds the 16 row-major entries of every M_l,
  /// entry-major: step_soa[e * lanes + l]. out[l * (steps + 1) + n].
  void (*flow_distances)(const double* step_soa, std::size_t lanes, const double* x0,
                         const double* target, std::size_t steps, double* out);
};

const KernelTable& scalar_table();

/// nullptr when the AVX2 translation unit was not built or the CPU lacks
/// AVX2/FMA.
const KernelTable* avx2_table();

/// The table every library routine uses.
const KernelTable& active();

}  // namespace isinggate::kernels
