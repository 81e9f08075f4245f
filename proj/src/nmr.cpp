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

#include "isinggate/nmr.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isinggate/kernels.hpp"
#include "isinggate/sequences.hpp"

namespace isinggate {

DensityOperator prepare_rho_a() { return spin_op(1, PauliAxis::x); }

DensityOperator apply_gate(const OperatorMatrix& u, const DensityOperator& rho) {
  return conjugate(u, rho);
}

DensityOperator apply_gate(const Propagator& u, const DensityOperator& rho) {
  return apply_gate(u.matrix, rho);
}

StateLabel state_label_from_string(const std::string& s) {
  if (s == "A") return StateLabel::A;
  if (s == "B") return StateLabel::B;
  if (s == "C") return StateLabel::C;
  if (s == "D") return StateLabel::D;
  throw std::invalid_argument("unknown state label: " + s);
}

std::vector<ProductOperator> expected_support(StateLabel label) {
  std::vector<std::string_view> labels;
  switch (label) {
    case StateLabel::A: labels = {"x11"}; break;
    case StateLabel::B: labels = {"y1z"}; break;
    case StateLabel::C: labels = {"x11", "y1z"}; break;
    case StateLabel::D: labels = {"x11", "xz1", "x1x", "xzx"}; break;
  }
  std::vector<ProductOperator> ops;
  for (auto l : labels) ops.push_back(ProductOperator::parse(l));
  std::sort(ops.begin(), ops.end());
  return ops;
}

StateCheck verify_state(StateLabel label, const DensityOperator& rho, double tol) {
  const Decomposition d = decompose(rho);
  StateCheck c;
  c.label = label;
  c.support = d.support(tol);
  c.identity = d.identity;
  for (const auto& op : c.support) c.coefficients[op] = d.coefficients.at(op);
  c.pass = c.support == expected_support(label) && std::abs(d.identity) <= tol;
  return c;
}

DensityOperator prepared_state(StateLabel label, const CouplingTopology& topology) {
  const DensityOperator rho = prepare_rho_a();
  switch (label) {
    case StateLabel::A: return rho;
    case StateLabel::B: return apply_gate(compile(u13_from_geodesic(), topology), rho);
    case StateLabel::C: return apply_gate(compile(sqrt_u13(), topology), rho);
    case StateLabel::D: return apply_gate(compile(toffoli(ToffoliVariant::T6), topology), rho);
  }
  throw std::invalid_argument("unknown state label");
}

CouplingTopology spectrum_preset(const std::string& name) {
  if (name == "acetamide") return CouplingTopology::acetamide();
  if (name == "ideal") {
    CouplingTopology t = CouplingTopology::ideal(88.0);
    t.nu3 = 310.0;
    return t;
  }
  throw std::invalid_argument("unknown parameter preset: " + name);
}

std::vector<cplx> simulate_fid(const DensityOperator& rho0, const SpectrumConfig& cfg) {
  if (cfg.detect.empty()) throw std::invalid_argument("detect set must not be empty");
  for (int q : cfg.detect)
    if (q < 1 || q > 3) throw std::invalid_argument("detected qubits must be 1, 2 or 3");
  if (!(cfg.acquisition_s > 0.0) || !std::isfinite(cfg.acquisition_s))
    throw std::invalid_argument("acquisition time must be positive");
  if (cfg.points < 2) throw std::invalid_argument("at least two points are required");
  if (!(cfg.line_broadening_hz >= 0.0)) throw std::invalid_argument("line broadening must be non-negative");
  if (!is_hermitian(rho0, 1e-12 * std::max(1.0, rho0.cwiseAbs().maxCoeff())))
    throw std::invalid_argument("density operator must be Hermitian");

  OperatorMatrix fplus = OperatorMatrix::Zero();
  for (int q : cfg.detect) fplus += spin_op(q, PauliAxis::x) + cplx(0, 1) * spin_op(q, PauliAxis::y);

  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(build_hamiltonian(cfg.topology));
  const OperatorMatrix& v = es.eigenvectors();
  const OperatorMatrix rho = v.adjoint() * rho0 * v;
  const OperatorMatrix f = v.adjoint() * fplus * v;

  // trace(F rho(t)) = sum_jk F_kj rho_jk exp(i (lambda_k - lambda_j) t) in the eigenbasis.
  std::vector<cplx> amp;
  std::vector<double> omega;
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) {
      amp.push_back(f(k, j) * rho(j, k));
      omega.push_back(es.eigenvalues()(k) - es.eigenvalues()(j));
    }
  std::vector<cplx> fid(cfg.points);
  const double dt = cfg.acquisition_s / static_cast<double>(cfg.points);
  kernels::active().phasor_sum(amp.data(), omega.data(), amp.size(), std::numbers::pi * cfg.line_broadening_hz,
                               dt, cfg.points, fid.data());
  return fid;
}

Spectrum simulate_spectrum(const DensityOperator& rho0, const SpectrumConfig& cfg) {
  const std::vector<cplx> fid = simulate_fid(rho0, cfg);
  std::vector<cplx> raw;
  Eigen::FFT<double> fft;
  fft.fwd(raw, fid);
  const std::size_t n = cfg.points, half = n / 2;
  Spectrum s;
  s.frequency_hz.resize(n);
  s.value.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    s.frequency_hz[k] = (static_cast<double>(k) - static_cast<double>(half)) / cfg.acquisition_s;
    s.value[k] = raw[(k + n - half) % n];
  }
  return s;
}

}  // namespace isinggate
