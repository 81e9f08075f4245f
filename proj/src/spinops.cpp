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

#include "isinggate/spinops.hpp"

#include <cmath>
#include <stdexcept>

namespace isinggate {

namespace {

using Mat2 = Eigen::Matrix<cplx, 2, 2>;

Mat2 half_pauli(PauliAxis a) {
  const cplx i(0.0, 1.0);
  Mat2 m;
  switch (a) {
    case PauliAxis::identity: m << 1, 0, 0, 1; return m;
    case PauliAxis::x: m << 0, 0.5, 0.5, 0; return m;
    case PauliAxis::y: m << 0, -0.5 * i, 0.5 * i, 0; return m;
    case PauliAxis::z: m << 0.5, 0, 0, -0.5; return m;
  }
  throw std::logic_error("unreachable PauliAxis");
}

// Kronecker product of three 2x2 factors, first argument leftmost.
OperatorMatrix kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
  OperatorMatrix out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          for (int i3 = 0; i3 < 2; ++i3)
            for (int j3 = 0; j3 < 2; ++j3)
              out(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * j2 + j3) =
                  a(i1, j1) * b(i2, j2) * c(i3, j3);
  return out;
}

int axis_digit(PauliAxis a) { return static_cast<int>(a); }

}  // namespace

char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::identity: return '1';
    case PauliAxis::x: return 'x';
    case PauliAxis::y: return 'y';
    case PauliAxis::z: return 'z';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case '1': return PauliAxis::identity;
    case 'x': return PauliAxis::x;
    case 'y': return PauliAxis::y;
    case 'z': return PauliAxis::z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli axis '") + c + "'");
  }
}

ProductOperator ProductOperator::parse(std::string_view label) {
  if (label.size() != 3)
    throw std::invalid_argument("product operator label must have 3 characters: '" +
                                std::string(label) + "'");
  return {axis_from_char(label[0]), axis_from_char(label[1]), axis_from_char(label[2])};
}

ProductOperator ProductOperator::single(int qubit, PauliAxis axis) {
  if (qubit < 1 || qubit > 3) throw std::invalid_argument("qubit index must be 1, 2 or 3");
  ProductOperator p;
  p.axes_[qubit - 1] = axis;
  return p;
}

int ProductOperator::weight() const {
  int q = 0;
  for (auto a : axes_) q += (a != PauliAxis::identity);
  return q;
}

std::string ProductOperator::label() const {
  return {axis_char(axes_[0]), axis_char(axes_[1]), axis_char(axes_[2])};
}

int ProductOperator::index() const {
  return 16 * axis_digit(axes_[0]) + 4 * axis_digit(axes_[1]) + axis_digit(axes_[2]);
}

ProductOperator ProductOperator::from_index(int index) {
  if (index < 0 || index >= 64) throw std::out_of_range("product operator index");
  return {static_cast<PauliAxis>(index / 16), static_cast<PauliAxis>((index / 4) % 4),
          static_cast<PauliAxis>(index % 4)};
}

OperatorMatrix product_op(const ProductOperator& spec) {
  const double prefactor = std::ldexp(1.0, spec.weight() - 1);
  return prefactor *
         kron3(half_pauli(spec.axis(1)), half_pauli(spec.axis(2)), half_pauli(spec.axis(3)));
}

OperatorMatrix product_op(std::string_view label) {
  return product_op(ProductOperator::parse(label));
}

OperatorMatrix spin_op(int qubit, PauliAxis axis) {
  return product_op(ProductOperator::single(qubit, axis));
}

const std::vector<BasisElement>& basis63() {
  static const std::vector<BasisElement> basis = [] {
    std::vector<BasisElement> b;
    b.reserve(63);
    for (int k = 1; k < 64; ++k) {
      const auto op = ProductOperator::from_index(k);
      b.push_back({op, product_op(op)});
    }
    return b;
  }();
  return basis;
}

cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a.adjoint() * b).trace();
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double Decomposition::operator[](std::string_view label) const {
  return coefficients.at(ProductOperator::parse(label));
}

OperatorMatrix Decomposition::reconstruct() const {
  OperatorMatrix m = identity * OperatorMatrix::Identity();
  for (const auto& [op, c] : coefficients) m += c * product_op(op);
  return m;
}

std::vector<ProductOperator> Decomposition::support(double tol) const {
  std::vector<ProductOperator> out;
  for (const auto& [op, c] : coefficients)
    if (std::abs(c) > tol) out.push_back(op);
  return out;
}

Decomposition decompose(const OperatorMatrix& rho) {
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if (!is_hermitian(rho, 1e-12 * scale))
    throw std::invalid_argument("decompose: operator is not Hermitian");
  Decomposition d;
  d.identity = rho.trace().real() / 8.0;
  for (const auto& b : basis63()) d.coefficients[b.op] = (b.matrix * rho).trace().real() / 2.0;
  return d;
}

const std::array<ProductOperator, 6>& state6_operators() {
  static const std::array<ProductOperator, 6> ops = {
      ProductOperator::parse("x11"), ProductOperator::parse("yz1"),
      ProductOperator::parse("yx1"), ProductOperator::parse("yyz"),
      ProductOperator::parse("yzz"), ProductOperator::parse("x1z")};
  return ops;
}

StateVector6 state6(const OperatorMatrix& rho) {
  const auto d = decompose(rho);
  StateVector6 s;
  const auto& ops = state6_operators();
  for (std::size_t i = 0; i < ops.size(); ++i) s.x[i] = d.coefficients.at(ops[i]);
  s.x[5] = -s.x[5];
  return s;
}

}  // namespace isinggate
