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
#include <vector>

#include "../oracle.hpp"
#include "isinggate/kernels.hpp"

using namespace isinggate::kernels;
using cplx = std::complex<double>;

namespace {

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> t{&scalar_table()};
  if (const auto* a = avx2_table()) t.push_back(a);
  return t;
}

}  // namespace

TEST_CASE("active table is one of the known tables") {
  const auto& a = active();
  CHECK((a.isa == Isa::scalar || a.isa == Isa::avx2));
  CHECK(isa_name(Isa::scalar) == "scalar");
  CHECK(isa_name(Isa::avx2) == "avx2");
  if (!avx2_table()) MESSAGE("avx2 kernels unavailable on this host; only scalar checked");
}

TEST_CASE("cmatmul8 matches Eigen for every table") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::M8 a = oracle::random_unitary(rng), b = oracle::random_hermitian(rng);
    const oracle::M8 want = a * b;
    for (const auto* t : tables()) {
      oracle::M8 c;
      t->cmatmul8(a.data(), b.data(), c.data());
      CHECK((c - want).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("phasor_sum matches the direct sum and agrees across tables") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t terms : {1u, 2u, 5u, 64u}) {
    std::vector<cplx> amp(terms);
    std::vector<double> omega(terms);
    for (std::size_t p = 0; p < terms; ++p) {
      amp[p] = cplx(u(rng), u(rng));
      omega[p] = 2000.0 * u(rng);
    }
    const std::size_t points = 1000;
    const double decay = 10.0, dt = 1.0 / 4096;
    std::vector<cplx> direct(points);
    for (std::size_t n = 0; n < points; ++n) {
      const double t = static_cast<double>(n) * dt;
      cplx s = 0;
      for (std::size_t p = 0; p < terms; ++p) s += amp[p] * std::polar(1.0, omega[p] * t);
      direct[n] = s * std::exp(-decay * t);
    }
    std::vector<std::vector<cplx>> results;
    for (const auto* t : tables()) {
      std::vector<cplx> out(points);
      t->phasor_sum(amp.data(), omega.data(), terms, decay, dt, points, out.data());
      double dev = 0.0;
      for (std::size_t n = 0; n < points; ++n) dev = std::max(dev, std::abs(out[n] - direct[n]));
      CHECK(dev < 1e-11);
      results.push_back(out);
    }
    for (std::size_t i = 1; i < results.size(); ++i)
      for (std::size_t n = 0; n < points; ++n) CHECK(std::abs(results[i][n] - results[0][n]) < 1e-11);
  }
}

TEST_CASE("flow_distances matches step-by-step evolution, including ragged lane counts") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double x0[4] = {1, 0, 0, 0};
  const double target[3] = {0.2, 0.7, 0.1};
  const std::size_t steps = 200;
  for (std::size_t lanes : {1u, 3u, 4u, 5u, 8u, 11u}) {
    std::vector<Eigen::Matrix4d> mats(lanes);
    std::vector<double> soa(16 * lanes);
    for (std::size_t l = 0; l < lanes; ++l) {
      Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          a(i, j) = 0.05 * u(rng);
          a(j, i) = -a(i, j);
        }
      mats[l] = Eigen::Matrix4d::Identity() + a + 0.5 * a * a;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) soa[(4 * r + c) * lanes + l] = mats[l](r, c);
    }
    std::vector<double> want(lanes * (steps + 1));
    for (std::size_t l = 0; l < lanes; ++l) {
      Eigen::Vector4d x(1, 0, 0, 0);
      for (std::size_t n = 0; n <= steps; ++n) {
        const double dy = std::hypot(x(1), x(2)) - target[1];
        want[l * (steps + 1) + n] =
            std::sqrt((x(0) - target[0]) * (x(0) - target[0]) + dy * dy + (x(3) - target[2]) * (x(3) - target[2]));
        x = mats[l] * x;
      }
    }
    for (const auto* t : tables()) {
      std::vector<double> out(lanes * (steps + 1));
      t->flow_distances(soa.data(), lanes, x0, target, steps, out.data());
      double dev = 0.0;
      for (std::size_t i = 0; i < out.size(); ++i) dev = std::max(dev, std::abs(out[i] - want[i]));
      CHECK(dev < 1e-12);
    }
  }
}
