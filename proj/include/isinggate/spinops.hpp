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

// Product-operator algebra for three spins-1/2.
//
// Qubit 1 is the leftmost tensor factor everywhere in this library. A
// ProductOperator with q non-identity factors carries the prefactor 2^(q-1),
// so e.g. "yz1" is 2*I1y*I2z and "yyz" is 4*I1y*I2y*I3z. With that
// normalization every basis element B satisfies trace(B*B) = 2.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isinggate {

using cplx = std::complex<double>;
using OperatorMatrix = Eigen::Matrix<cplx, 8, 8>;

enum class PauliAxis { identity, x, y, z };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/// Three per-qubit axes; serialized as e.g. "yz1".
class ProductOperator {
 public:
  constexpr ProductOperator() = default;
  constexpr ProductOperator(PauliAxis a1, PauliAxis a2, PauliAxis a3)
      : axes_{a1, a2, a3} {}

  /// Parses a 3-character label over {x,y,z,1}. Throws std::invalid_argument.
  static ProductOperator parse(std::string_view label);

  /// Single-spin operator I_{k,axis}, k in {1,2,3}.
  static ProductOperator single(int qubit, PauliAxis axis);

  PauliAxis axis(int qubit) const { return axes_.at(qubit - 1); }
  int weight() const;
  bool is_identity() const { return weight() == 0; }
  std::string label() const;

  /// Index in [0, 64): base-4 digits (qubit 1 most significant),
  /// identity = 0, x = 1, y = 2, z = 3.
  int index() const;
  static ProductOperator from_index(int index);

  friend bool operator==(const ProductOperator&, const ProductOperator&) = default;
  friend auto operator<=>(const ProductOperator& a, const ProductOperator& b) {
    return a.index() <=> b.index();
  }

 private:
  std::array<PauliAxis, 3> axes_{PauliAxis::identity, PauliAxis::identity,
                                 PauliAxis::identity};
};

/// 2^(q-1) * (x)_k (1/2 sigma_{a_k} or identity). The all-identity spec has
/// q = 0 and yields the 8x8 identity times 1/2.
OperatorMatrix product_op(const ProductOperator& spec);
OperatorMatrix product_op(std::string_view label);

/// Shorthand for the single-spin operator I_{k,axis}.
OperatorMatrix spin_op(int qubit, PauliAxis axis);

struct BasisElement {
  ProductOperator op;
  OperatorMatrix matrix;
};

/// All 63 non-identity product operators, ordered by ProductOperator::index.
const std::vector<BasisElement>& basis63();

/// <A, B> = trace(A^dag B).
cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b);

bool is_hermitian(const OperatorMatrix& m, double tol = 1e-12);

struct Decomposition {
  double identity = 0.0;                           ///< coefficient of the 8x8 identity
  std::map<ProductOperator, double> coefficients;  ///< all 63 entries present

  double operator[](std::string_view label) const;
  OperatorMatrix reconstruct() const;
  /// Basis labels with |coefficient| > tol, in index order.
  std::vector<ProductOperator> support(double tol) const;
};

/// rho = c0 * 1 + sum_B c_B * B with c_B = trace(B rho)/2.
/// Throws std::invalid_argument for non-Hermitian input.
Decomposition decompose(const OperatorMatrix& rho);

/// (x1..x6) of the six-dimensional transfer subspace.
struct StateVector6 {
  std::array<double, 6> x{};
  double operator[](std::size_t i) const { return x[i]; }
};

/// (<I1x>, <2I1yI2z>, <2I1yI2x>, <4I1yI2yI3z>, <4I1yI2zI3z>, -<2I1xI3z>)
/// with <B> = trace(B rho)/2.
StateVector6 state6(const OperatorMatrix& rho);

/// The six operators behind state6, without the x6 sign flip.
const std::array<ProductOperator, 6>& state6_operators();

}  // namespace isinggate
