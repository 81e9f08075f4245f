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

// Gate targets, pulse-level and factorization-level realizations, the
// duration ledger and broadband (offset-refocused) variants.
//
// Factor lists and pulse sequences are both stored in time order: the first
// entry acts first.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isinggate/geodesic.hpp"
#include "isinggate/propagator.hpp"

namespace isinggate {

enum class GateKind { CNOT13, U13, SQRT_U13, U13S, U_ZZY, U_ZYZ, TOFFOLI, H_TOFF };

struct GateTarget {
  GateKind kind = GateKind::CNOT13;
  double kappa = 1.0;  ///< only used by U_ZYZ

  std::string name() const;
  /// Explicit exponential form of the gate.
  OperatorMatrix matrix() const;
};

/// exp(-i G); cost is the coupling time in multiples of 1/J (0 for local factors).
struct Factor {
  std::string label;
  OperatorMatrix generator;
  double cost = 0.0;
};

struct Factorization {
  std::vector<Factor> factors;
  double duration() const;
  OperatorMatrix product() const;
};

struct Realization {
  std::string label;
  GateTarget target;
  std::variant<PulseSequence, Factorization> form;
  double duration = 0.0;  ///< multiples of 1/J

  bool pulse_level() const { return std::holds_alternative<PulseSequence>(form); }
  const PulseSequence& sequence() const;
};

/// Pulse sequences are compiled on `topology`; factorizations ignore it.
Propagator compile(const Realization& r, const CouplingTopology& topology = CouplingTopology::ideal());

/// Optimal phi = pi/4 transfer; computed once and cached.
const GeodesicSolution& cnot_geodesic();

// Pulse level.
Realization u13_geodesic();
Realization u13_from_geodesic();
Realization cnot13_from_geodesic();
/// exp(-i (pi kappa / 2) 4 I1a I2b I3c) for axes = "abc". kappa = 0 gives an
/// empty sequence.
Realization trilinear_propagator(double kappa, const std::string& axes = "zyz");
Realization sqrt_u13();

enum class ToffoliVariant { T5, T6 };
Realization toffoli(ToffoliVariant variant);
/// exp(-i H_toff) without the outer local corrections.
Realization toffoli_core();

// Factorization level.
enum class ConventionalVariant { C1, C2, C3, C4 };
Realization conventional_cnot13(ConventionalVariant variant);

// ---------------------------------------------------------------------------
// Broadband variants.

enum class BroadbandGate { U13, SQRT_U13, TOFFOLI };

struct BroadbandParameters {
  double segment_delay = 0.0;  ///< Delta = tau / (4m), multiples of 1/J
  double flip = 0.0;           ///< delta = 2 pi nu tau / (4m), rad
  int segments = 0;            ///< 4m
};

/// Parameters of the discretized weak pulse. Throws std::invalid_argument for m < 1.
BroadbandParameters broadband_parameters(BroadbandGate gate, int m);

/// Each weak pulse becomes 4m blocks Delta/2 - delta - Delta/2 - pi_x(1,2,3)
/// and each delay d becomes d/2 - pi_x(1,2,3) - d/2 - pi_x(1,2,3).
Realization broadband_variant(BroadbandGate gate, int m);

/// Regression bound on the zero-offset infidelity at m = 2.
double broadband_zero_offset_bound(BroadbandGate gate);

// ---------------------------------------------------------------------------
// Selective rotations of a proton from hard pulses and offset evolution.

/// Delta1 = |flip| / (2 pi |delta_nu13|) in seconds; 1/(4 delta_nu13) for 90 degrees.
double selective_delay_s(double flip, double delta_nu13);

/// Rotation exp(-i flip I_{q,phase}) on q in {1, 3}, assuming spin 1 on
/// resonance and spin 3 offset by delta_nu13. Delays are expressed in
/// multiples of 1/unit_hz.
PulseSequence selective_pulse_emulation(int target_qubit, double flip, PauliAxis phase,
                                        double delta_nu13, double unit_hz = 88.0);

struct SelectiveReport {
  PulseSequence sequence;
  double delay_s = 0.0;
  double fidelity_uncoupled = 0.0;
  double fidelity_coupled = 0.0;
};

/// Compiles the emulation on `topology` (its nu3 - nu1 is the frequency
/// difference), once with couplings frozen during the delays and once with
/// them evolving.
SelectiveReport selective_pulse_report(int target_qubit, double flip, PauliAxis phase,
                                       const CouplingTopology& topology);

// ---------------------------------------------------------------------------
// Ledger.

struct DurationRow {
  std::string label;
  std::string description;
  double duration = 0.0;  ///< multiples of 1/J
  double relative = 0.0;  ///< percent of the family reference (C1 or T1)
};

std::vector<DurationRow> duration_table();

/// Labels accepted by realization(): C1-C5, T5, T6, SQRT13, U13, U13G and
/// BB_U13, BB_SQRT13, BB_TOFF (optionally written BB_U13(m)).
std::vector<std::string> realization_labels();
/// Throws std::invalid_argument for unknown labels.
Realization realization(const std::string& label, int m = 2);

struct GateCheck {
  std::string label;
  std::string target;
  double duration = 0.0;
  double fidelity = 0.0;
  double infidelity = 0.0;
  double unitarity_deviation = 0.0;
  std::optional<double> subspace_deviation;  ///< set for U13G
  double tolerance = 0.0;
  bool pass = false;
};

/// Compiles the realization on the ideal chain and compares with its target.
/// Passes when 1 - F <= tol. For U13G the check is the conjugation match on
/// the 1-3 subspace against U13S.
GateCheck verify_realization(const Realization& r, double tol);

}  // namespace isinggate
