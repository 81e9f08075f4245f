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

// Hamiltonians, unitary evolution and pulse-sequence compilation.
//
// Units: coupling constants and offsets are in Hz. Durations of pulse events
// are multiples of 1/J where J = CouplingTopology::unit_hz, so on the ideal
// chain (J = 1 Hz) a duration of 0.5 is 0.5 s. Weak-pulse amplitudes are
// multiples of J.
//
// Ordering: events are listed in time order and the compiled propagator is
// U = U_last * ... * U_first.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "isinggate/spinops.hpp"

namespace isinggate {

struct CouplingTopology {
  double j12 = 1.0;
  double j23 = 1.0;
  double j13 = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  double nu3 = 0.0;
  double unit_hz = 1.0;  ///< J used to convert durations and amplitudes

  /// Linear chain J12 = J23 = j, J13 = 0, on resonance.
  static CouplingTopology ideal(double j = 1.0);
  /// 15N acetamide amino moiety: J12 = -87.3, J23 = -88.8, J13 = 2.9 Hz,
  /// nu3 - nu1 = 310 Hz, reference |J| = 88 Hz.
  static CouplingTopology acetamide();
  static CouplingTopology zero();
};

struct RfField {
  int qubit = 2;
  double amplitude_hz = 0.0;
  PauliAxis phase = PauliAxis::y;
};

/// H in rad/s: 2 pi (J12 I1zI2z + J23 I2zI3z + J13 I1zI3z + sum_k nu_k I_kz)
/// + 2 pi amplitude I_{k,phase}. Coupling terms are dropped when
/// couplings == false; offsets are always present.
OperatorMatrix build_hamiltonian(const CouplingTopology& topology,
                                 const std::optional<RfField>& rf = std::nullopt,
                                 bool couplings = true);

struct Propagator {
  OperatorMatrix matrix = OperatorMatrix::Identity();
  double duration = 0.0;  ///< multiples of 1/J

  /// max |U^dag U - 1|.
  double unitarity_deviation() const;
};

/// exp(-i H t) via Hermitian eigendecomposition. Throws std::invalid_argument
/// for non-Hermitian H or negative t.
Propagator evolve(const OperatorMatrix& hamiltonian, double t);

/// exp(-i G) for Hermitian G; G already includes the rotation angle.
OperatorMatrix exp_i(const OperatorMatrix& generator);

/// a * b through the active SIMD kernel.
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

/// U B U^dag.
OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& b);

// ---------------------------------------------------------------------------
// Pulse events.

/// Instantaneous rotation exp(-i flip sum_k I_{k,phase}) on the target set.
struct HardPulse {
  std::vector<int> targets;
  double flip = 0.0;
  PauliAxis phase = PauliAxis::x;
};

/// Constant rf on one qubit for a finite time, optionally with the couplings
/// evolving concurrently.
struct WeakPulse {
  int target = 2;
  double amplitude = 0.0;  ///< multiples of J (Hz = amplitude * J)
  PauliAxis phase = PauliAxis::y;
  double duration = 0.0;  ///< multiples of 1/J
  bool couplings = true;
};

struct Delay {
  double duration = 0.0;  ///< multiples of 1/J
  bool couplings = true;
};

/// Instantaneous exp(-i angle I_kz).
struct ZRotation {
  int target = 1;
  double angle = 0.0;
};

using PulseEvent = std::variant<HardPulse, WeakPulse, Delay, ZRotation>;

double event_duration(const PulseEvent& event);

struct PulseSequence {
  std::string name;
  std::vector<PulseEvent> events;

  PulseSequence& hard(std::vector<int> targets, double flip, PauliAxis phase);
  PulseSequence& weak(int target, double amplitude, PauliAxis phase, double duration,
                      bool couplings = true);
  PulseSequence& delay(double duration, bool couplings = true);
  PulseSequence& zrot(int target, double angle);
  /// Appends the events of `later` (they happen after the current ones).
  PulseSequence& then(const PulseSequence& later);

  /// Sum of event durations (hard pulses and z-rotations contribute 0).
  double nominal_duration() const;
};

/// Throws std::invalid_argument for negative durations, non-finite angles,
/// qubit indices outside 1..3 or identity phases.
void validate(const PulseSequence& seq);

double duration(const PulseSequence& seq);

/// Propagator of a single event.
OperatorMatrix event_propagator(const PulseEvent& event, const CouplingTopology& topology);

Propagator compile(const PulseSequence& seq, const CouplingTopology& topology);

// ---------------------------------------------------------------------------
// Equivalence checks.

constexpr double kDefaultEquivalenceTol = 1e-9;

/// |trace(U^dag V)| / 8.
double gate_fidelity(const OperatorMatrix& u, const OperatorMatrix& v);
double gate_fidelity(const Propagator& u, const Propagator& v);

struct ConjugationMatch {
  bool match = false;
  double max_deviation = 0.0;
};

/// max over B of |U B U^dag - V B V^dag|_max compared against tol.
ConjugationMatch conjugation_match(const OperatorMatrix& u, const OperatorMatrix& v,
                                   std::span<const ProductOperator> subspace,
                                   double tol = kDefaultEquivalenceTol);

/// {I1a, I3b, 2 I1a I3b} for a, b in {x, y, z}: the 15 operators acted on
/// by the indirect 1-3 coupling.
const std::vector<ProductOperator>& subspace_13();

}  // namespace isinggate
