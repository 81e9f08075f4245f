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

// Reference constructions used as independent oracles: explicit Kronecker
// products of Pauli matrices, a scaling-and-squaring Taylor exponential and
// seeded random operators.

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <string_view>

namespace oracle {

using cplx = std::complex<double>;
using M2 = Eigen::Matrix<cplx, 2, 2>;
using M8 = Eigen::Matrix<cplx, 8, 8>;

inline M2 half_pauli(char a) {
  M2 m = M2::Zero();
  switch (a) {
    case 'x': m << 0, 0.5, 0.5, 0; break;
    case 'y': m << 0, cplx(0, -0.5), cplx(0, 0.5), 0; break;
    case 'z': m << 0.5, 0, 0, -0.5; break;
    default: m = M2::Identity();
  }
  return m;
}

inline M8 kron3(const M2& a, const M2& b, const M2& c) {
  M8 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) out(4 * i + 2 * k + m, 4 * j + 2 * l + n) = a(i, j) * b(k, l) * c(m, n);
  return out;
}

/// 2^(q-1) I_{1a} (x) I_{2b} (x) I_{3c} for a label such as "yz1".
inline M8 product(std::string_view label) {
  int q = 0;
  for (char c : label) q += c != '1';
  return std::pow(2.0, q - 1) * kron3(half_pauli(label[0]), half_pauli(label[1]), half_pauli(label[2]));
}

inline M8 single(int k, char a) {
  char l[3] = {'1', '1', '1'};
  l[k - 1] = a;
  return product(std::string_view(l, 3));
}

/// exp(-i G) by scaling, 30-term Taylor series and squaring.
inline M8 expm_i(const M8& g) {
  const double norm = g.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::pow(2.0, s) > 0.25) ++s;
  const M8 a = cplx(0, -1) * g / std::pow(2.0, s);
  M8 term = M8::Identity(), sum = M8::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

inline double fidelity(const M8& u, const M8& v) { return std::abs((u.adjoint() * v).trace()) / 8.0; }

inline M8 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  M8 m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = cplx(n(rng), n(rng));
  return 0.5 * (m + m.adjoint());
}

inline M8 random_unitary(std::mt19937_64& rng) { return expm_i(random_hermitian(rng, 2.0)); }

}  // namespace oracle
