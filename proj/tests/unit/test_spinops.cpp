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

#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracle.hpp"
#include "isinggate/spinops.hpp"

using namespace isinggate;

namespace {

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("product_op matches explicit Kronecker products") {
  const OperatorMatrix i1x = product_op("x11");
  CHECK(std::abs(i1x.trace()) < 1e-15);
  CHECK(std::abs((i1x * i1x).trace() - 2.0) < 1e-14);

  const OperatorMatrix yz = product_op("yz1");
  CHECK(max_abs(yz - oracle::product("yz1")) < 1e-15);
  CHECK(std::abs(yz.trace()) < 1e-15);
  CHECK(std::abs((yz * yz).trace() - 2.0) < 1e-14);

  const OperatorMatrix yyz = product_op("yyz");
  const OperatorMatrix by_factors = 4.0 * oracle::single(1, 'y') * oracle::single(2, 'y') * oracle::single(3, 'z');
  CHECK(max_abs(yyz - by_factors) < 1e-15);
}

TEST_CASE("single-spin operators and identity spec") {
  for (int k = 1; k <= 3; ++k)
    for (char a : {'x', 'y', 'z'})
      CHECK(max_abs(spin_op(k, axis_from_char(a)) - oracle::single(k, a)) < 1e-15);
  CHECK(max_abs(product_op("111") - 0.5 * OperatorMatrix::Identity()) < 1e-15);
}

TEST_CASE("ProductOperator labels and indices") {
  const auto p = ProductOperator::parse("yz1");
  CHECK(p.label() == "yz1");
  CHECK(p.weight() == 2);
  CHECK(p.axis(1) == PauliAxis::y);
  CHECK(p.axis(3) == PauliAxis::identity);
  for (int i = 0; i < 64; ++i) CHECK(ProductOperator::from_index(i).index() == i);
  CHECK(ProductOperator::single(3, PauliAxis::z).label() == "11z");
  CHECK_THROWS_AS(ProductOperator::parse("xq1"), std::invalid_argument);
  CHECK_THROWS_AS(ProductOperator::parse("xx"), std::invalid_argument);
  CHECK_THROWS_AS(ProductOperator::single(4, PauliAxis::x), std::invalid_argument);
}

TEST_CASE("basis63 is orthogonal with norm 2") {
  const auto& basis = basis63();
  REQUIRE(basis.size() == 63);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i].matrix;
    CHECK(is_hermitian(b));
    CHECK(std::abs(b.trace()) < 1e-14);
    for (std::size_t j = i; j < basis.size(); ++j) {
      const cplx g = hs_inner(b, basis[j].matrix);
      CHECK(std::abs(g - (i == j ? 2.0 : 0.0)) <= 1e-12);
    }
  }
  CHECK(std::abs(hs_inner(product_op("x11"), product_op("yz1"))) < 1e-15);
  CHECK(std::abs(hs_inner(product_op("x1z"), product_op("x1z")) - 2.0) < 1e-14);
}

TEST_CASE("decompose examples") {
  const auto d = decompose(product_op("x11"));
  CHECK(d["x11"] == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& [op, c] : d.coefficients)
    if (op.label() != "x11") CHECK(std::abs(c) < 1e-15);

  const auto id = decompose(OperatorMatrix::Identity() / 8.0);
  CHECK(id.identity == doctest::Approx(0.125));
  CHECK(id.support(1e-15).empty());

  const auto c = decompose((product_op("x11") + product_op("y1z")) / std::sqrt(2.0));
  CHECK(c["x11"] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(c["y1z"] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(c.support(1e-12).size() == 2);
}

TEST_CASE("decompose round trip on random Hermitian matrices") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 50; ++trial) {
    const OperatorMatrix h = oracle::random_hermitian(rng);
    const auto d = decompose(h);
    CHECK(max_abs(d.reconstruct() - h) <= 1e-12);
  }
}

TEST_CASE("decompose rejects non-Hermitian input") {
  OperatorMatrix m = OperatorMatrix::Zero();
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(decompose(m), std::invalid_argument);
  CHECK_THROWS_AS(state6(m), std::invalid_argument);
}

TEST_CASE("state6 coordinates") {
  auto expect = [](const OperatorMatrix& rho, std::array<double, 6> want) {
    const auto s = state6(rho);
    for (std::size_t i = 0; i < 6; ++i) CHECK(s[i] == doctest::Approx(want[i]).epsilon(1e-14));
  };
  expect(product_op("x11"), {1, 0, 0, 0, 0, 0});
  expect(-product_op("x1z"), {0, 0, 0, 0, 0, 1});
  expect(product_op("yz1"), {0, 1, 0, 0, 0, 0});

  std::mt19937_64 rng(7);
  const OperatorMatrix rho = oracle::random_hermitian(rng);
  const auto s = state6(rho);
  const auto d = decompose(rho);
  const auto& ops = state6_operators();
  for (std::size_t i = 0; i < 5; ++i) CHECK(s[i] == doctest::Approx(d.coefficients.at(ops[i])));
  CHECK(s[5] == doctest::Approx(-d.coefficients.at(ops[5])));
}
