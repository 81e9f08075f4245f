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

// Density operators, gate application, product-operator checks of the
// transferred states and 1-D spectrum simulation.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "isinggate/propagator.hpp"

namespace isinggate {

using DensityOperator = OperatorMatrix;

/// rho_A = I1x.
DensityOperator prepare_rho_a();

/// U rho U^dag.
DensityOperator apply_gate(const Propagator& u, const DensityOperator& rho);
DensityOperator apply_gate(const OperatorMatrix& u, const DensityOperator& rho);

enum class StateLabel { A, B, C, D };

StateLabel state_label_from_string(const std::string& s);
/// Basis terms expected in the state (A: I1x, B: 2I1yI3z, C: I1x and 2I1yI3z,
/// D: I1x, 2I1xI2z, 2I1xI3x, 4I1xI2zI3x).
std::vector<ProductOperator> expected_support(StateLabel label);

struct StateCheck {
  StateLabel label = StateLabel::A;
  std::vector<ProductOperator> support;
  std::map<ProductOperator, double> coefficients;  ///< over the support
  double identity = 0.0;
  bool pass = false;
};

constexpr double kSupportTol = 1e-9;

/// Passes iff the support of decompose(rho) at tol is exactly the expected set.
StateCheck verify_state(StateLabel label, const DensityOperator& rho, double tol = kSupportTol);

/// rho_A transformed by the compiled sequence of the state (A: none, B: U13,
/// C: SQRT13, D: T6) on `topology`.
DensityOperator prepared_state(StateLabel label, const CouplingTopology& topology = CouplingTopology::ideal());

struct SpectrumConfig {
  CouplingTopology topology = CouplingTopology::acetamide();
  double line_broadening_hz = 3.2;
  double acquisition_s = 1.0;
  std::size_t points = 4096;
  std::set<int> detect{1, 3};
};

/// "acetamide" or "ideal" (J12 = J23 = 88 Hz, J13 = 0, nu3 = 310 Hz).
CouplingTopology spectrum_preset(const std::string& name);

struct Spectrum {
  std::vector<double> frequency_hz;  ///< (k - N/2) / acquisition, ascending
  std::vector<cplx> value;
};

/// s(t) = trace(F+ rho(t)) exp(-pi LB t), F+ = sum_{k in detect}(I_kx + i I_ky),
/// with rho(t) evolving under the free Hamiltonian of cfg.topology (Hz, s).
std::vector<cplx> simulate_fid(const DensityOperator& rho0, const SpectrumConfig& cfg);

/// Unnormalized DFT of simulate_fid, shifted so that zero frequency sits at
/// index N/2. Throws std::invalid_argument for an empty detect set,
/// non-positive acquisition time or fewer than two points.
Spectrum simulate_spectrum(const DensityOperator& rho0, const SpectrumConfig& cfg);

}  // namespace isinggate
