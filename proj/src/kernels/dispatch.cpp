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

#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace isinggate::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, detail::cmatmul8_scalar,
                                 detail::phasor_sum_scalar, detail::flow_distances_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(ISINGGATE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  static const KernelTable table{Isa::avx2, detail::cmatmul8_avx2, detail::phasor_sum_avx2,
                                 detail::flow_distances_avx2};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    if (const char* env = std::getenv("ISINGGATE_SIMD")) {
      const std::string v(env);
      if (v == "off" || v == "0" || v == "scalar") return scalar_table();
    }
    if (const auto* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return table;
}

}  // namespace isinggate::kernels
