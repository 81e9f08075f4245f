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

#include "isinggate/propagator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isinggate/kernels.hpp"

namespace isinggate {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const OperatorMatrix& iz(int k) {
  static const OperatorMatrix ops[3] = {spin_op(1, PauliAxis::z), spin_op(2, PauliAxis::z),
                                        spin_op(3, PauliAxis::z)};
  return ops[k - 1];
}

void check_qubit(int q) {
  if (q < 1 || q > 3) throw std::invalid_argument("qubit index must be 1, 2 or 3");
}

void check_phase(PauliAxis a) {
  if (a == PauliAxis::identity) throw std::invalid_argument("pulse phase must be x, y or z");
}

}  // namespace

CouplingTopology CouplingTopology::ideal(double j) {
  CouplingTopology t;
  t.j12 = j;
  t.j23 = j;
  t.j13 = 0.0;
  t.unit_hz = j;
  return t;
}

CouplingTopology CouplingTopology::acetamide() {
  CouplingTopology t;
  t.j12 = -87.3;
  t.j23 = -88.8;
  t.j13 = 2.9;
  t.nu1 = 0.0;
  t.nu2 = 0.0;
  t.nu3 = 310.0;
  t.unit_hz = 88.0;
  return t;
}

CouplingTopology CouplingTopology::zero() {
  CouplingTopology t;
  t.j12 = t.j23 = t.j13 = 0.0;
  return t;
}

OperatorMatrix build_hamiltonian(const CouplingTopology& topology, const std::optional<RfField>& rf,
                                 bool couplings) {
  OperatorMatrix h = OperatorMatrix::Zero();
  if (couplings) {
    h += kTwoPi * topology.j12 * iz(1) * iz(2);
    h += kTwoPi * topology.j23 * iz(2) * iz(3);
    h += kTwoPi * topology.j13 * iz(1) * iz(3);
  }
  h += kTwoPi * (topology.nu1 * iz(1) + topology.nu2 * iz(2) + topology.nu3 * iz(3));
  if (rf) {
    check_qubit(rf->qubit);
    check_phase(rf->phase);
    h += kTwoPi * rf->amplitude_hz * spin_op(rf->qubit, rf->phase);
  }
  return h;
}

double Propagator::unitarity_deviation() const {
  return (matrix.adjoint() * matrix - OperatorMatrix::Identity()).cwiseAbs().maxCoeff();
}

OperatorMatrix exp_i(const OperatorMatrix& generator) {
  const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
  if (!is_hermitian(generator, 1e-12 * scale))
    throw std::invalid_argument("exp_i: generator is not Hermitian");
  // Symmetrize so round-off in the input cannot leak into the eigensolver.
  const OperatorMatrix h = 0.5 * (generator + generator.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("exp_i: eigensolver failed");
  Eigen::Matrix<cplx, 8, 1> phases;
  for (int k = 0; k < 8; ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Propagator evolve(const OperatorMatrix& hamiltonian, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: time must be non-negative");
  return {exp_i(hamiltonian * t), t};
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix c;
  kernels::active().cmatmul8(a.data(), b.data(), c.data());
  return c;
}

OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& b) {
  const OperatorMatrix ud = u.adjoint();
  return multiply(multiply(u, b), ud);
}

// ---------------------------------------------------------------------------

double event_duration(const PulseEvent& event) {
  return std::visit(
      [](const auto& e) -> double {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, WeakPulse> || std::is_same_v<T, Delay>)
          return e.duration;
        else
          return 0.0;
      },
      event);
}

PulseSequence& PulseSequence::hard(std::vector<int> targets, double flip, PauliAxis phase) {
  events.emplace_back(HardPulse{std::move(targets), flip, phase});
  return *this;
}

PulseSequence& PulseSequence::weak(int target, double amplitude, PauliAxis phase,
                                   double duration, bool couplings) {
  events.emplace_back(WeakPulse{target, amplitude, phase, duration, couplings});
  return *this;
}

PulseSequence& PulseSequence::delay(double duration, bool couplings) {
  events.emplace_back(Delay{duration, couplings});
  return *this;
}

PulseSequence& PulseSequence::zrot(int target, double angle) {
  events.emplace_back(ZRotation{target, angle});
  return *this;
}

PulseSequence& PulseSequence::then(const PulseSequence& later) {
  events.insert(events.end(), later.events.begin(), later.events.end());
  return *this;
}

double PulseSequence::nominal_duration() const {
  double total = 0.0;
  for (const auto& e : events) total += event_duration(e);
  return total;
}

double duration(const PulseSequence& seq) { return seq.nominal_duration(); }

void validate(const PulseSequence& seq) {
  auto check_time = [](double t) {
    if (!std::isfinite(t) || t < 0.0)
      throw std::invalid_argument("pulse event duration must be finite and non-negative");
  };
  auto check_angle = [](double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("pulse angle must be finite");
  };
  for (const auto& event : seq.events) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, HardPulse>) {
            if (e.targets.empty()) throw std::invalid_argument("hard pulse without targets");
            for (int q : e.targets) check_qubit(q);
            check_phase(e.phase);
            check_angle(e.flip);
          } else if constexpr (std::is_same_v<T, WeakPulse>) {
            check_qubit(e.target);
            check_phase(e.phase);
            check_angle(e.amplitude);
            check_time(e.duration);
          } else if constexpr (std::is_same_v<T, Delay>) {
            check_time(e.duration);
          } else {
            check_qubit(e.target);
            check_angle(e.angle);
          }
        },
        event);
  }
}

OperatorMatrix event_propagator(const PulseEvent& event, const CouplingTopology& topology) {
  return std::visit(
      [&](const auto& e) -> OperatorMatrix {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, HardPulse>) {
          OperatorMatrix g = OperatorMatrix::Zero();
          for (int q : e.targets) g += spin_op(q, e.phase);
          return exp_i(e.flip * g);
        } else if constexpr (std::is_same_v<T, WeakPulse>) {
          const RfField rf{e.target, e.amplitude * topology.unit_hz, e.phase};
          return evolve(build_hamiltonian(topology, rf, e.couplings), e.duration / topology.unit_hz)
              .matrix;
        } else if constexpr (std::is_same_v<T, Delay>) {
          return evolve(build_hamiltonian(topology, std::nullopt, e.couplings),
                        e.duration / topology.unit_hz)
              .matrix;
        } else {
          return exp_i(e.angle * iz(e.target));
        }
      },
      event);
}

Propagator compile(const PulseSequence& seq, const CouplingTopology& topology) {
  validate(seq);
  if (!(topology.unit_hz > 0.0)) throw std::invalid_argument("unit_hz must be positive");
  Propagator p;
  for (const auto& event : seq.events) p.matrix = multiply(event_propagator(event, topology), p.matrix);
  p.duration = seq.nominal_duration();
  return p;
}

// ---------------------------------------------------------------------------

double gate_fidelity(const OperatorMatrix& u, const OperatorMatrix& v) {
  return std::min(1.0, std::abs((u.adjoint() * v).trace()) / 8.0);
}

double gate_fidelity(const Propagator& u, const Propagator& v) {
  return gate_fidelity(u.matrix, v.matrix);
}

ConjugationMatch conjugation_match(const OperatorMatrix& u, const OperatorMatrix& v,
                                   std::span<const ProductOperator> subspace, double tol) {
  ConjugationMatch r;
  for (const auto& op : subspace) {
    const OperatorMatrix b = product_op(op);
    const double dev = (conjugate(u, b) - conjugate(v, b)).cwiseAbs().maxCoeff();
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  r.match = r.max_deviation <= tol;
  return r;
}

const std::vector<ProductOperator>& subspace_13() {
  static const std::vector<ProductOperator> ops = [] {
    const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
    std::vector<ProductOperator> v;
    for (auto a : axes) v.push_back(ProductOperator::single(1, a));
    for (auto b : axes) v.push_back(ProductOperator::single(3, b));
    for (auto a : axes)
      for (auto b : axes) v.emplace_back(a, PauliAxis::identity, b);
    return v;
  }();
  return ops;
}

}  // namespace isinggate
