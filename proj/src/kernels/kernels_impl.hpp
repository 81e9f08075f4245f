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

#include "isinggate/kernels.hpp"

namespace isinggate::kernels::detail {

void cmatmul8_scalar(const cplx* a, const cplx* b, cplx* c);
void phasor_sum_scalar(const cplx* amp, const double* omega, std::size_t terms, double decay,
                       double dt, std::size_t points, cplx* out);
void flow_distances_scalar(const double* step_soa, std::size_t lanes, const double* x0,
                           const double* target, std::size_t steps, double* out);

#if defined(ISINGGATE_HAVE_AVX2_TU)
void cmatmul8_avx2(const cplx* a, const cplx* b, cplx* c);
void phasor_sum_avx2(const cplx* amp, const double* omega, std::size_t terms, double decay,
                     double dt, std::size_t points, cplx* out);
void flow_distances_avx2(const double* step_soa, std::size_t lanes, const double* x0,
                         const double* target, std::size_t steps, double* out);
#endif

}  // namespace isinggate::kernels::detail
