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

#include "isinggate/sequences.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>

namespace isinggate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr PauliAxis X = PauliAxis::x;
constexpr PauliAxis Y = PauliAxis::y;
constexpr PauliAxis Z = PauliAxis::z;

OperatorMatrix op(std::string_view label) { return product_op(label); }
OperatorMatrix I(int k, PauliAxis a) { return spin_op(k, a); }

// Hard rotation R on qubit q with R I_from R^dag = I_to; sign -1 appends R^dag.
void frame(PulseSequence& s, int q, PauliAxis from, PauliAxis to, double sign) {
  if (from == to) return;
  PauliAxis axis = X;
  double angle = kPi / 2;
  if (from == Z && to == X) axis = Y;
  else if (from == Z && to == Y) angle = -angle;
  else if (from == Y && to == X) { axis = Z; angle = -angle; }
  else if (from == Y && to == Z) axis = X;
  else if (from == X && to == Y) axis = Z;
  else if (from == X && to == Z) { axis = Y; angle = -angle; }
  else throw std::invalid_argument("axes must be x, y or z");
  s.hard({q}, sign * angle, axis);
}

void append_u13g_core(PulseSequence& s) {
  const auto& g = cnot_geodesic();
  s.weak(2, g.u / 2, Y, g.tau).hard({2}, g.theta, Y).hard({2}, g.theta, X).weak(2, g.u / 2, X, g.tau);
}

void append_u_b(PulseSequence& s) {
  const double alpha = kPi - cnot_geodesic().theta;
  s.hard({1, 3}, -kPi / 2, Z).hard({2}, -alpha, X).hard({2}, -alpha, Y);
}

// exp(-i pi J t 2 I2zI3z); J12 refocused by two pi pulses on spin 1.
void append_coupling_23(PulseSequence& s, double t) {
  s.delay(t / 2).hard({1}, kPi, X).delay(t / 2).hard({1}, kPi, X);
}

// exp(-i pi J t 2 I1zI2z); J23 refocused on spin 3.
void append_coupling_12(PulseSequence& s, double t) {
  s.delay(t / 2).hard({3}, kPi, X).delay(t / 2).hard({3}, kPi, X);
}

// exp(-i (pi/2)(2 I1xI2x + 2 I2xI3z)), or its inverse when sign2 = -1.
void append_u1(PulseSequence& s, double sign2) {
  s.hard({1}, -kPi / 2, Y).hard({2}, -sign2 * kPi / 2, Y);
  s.delay(0.5);
  s.hard({1}, kPi / 2, Y).hard({2}, sign2 * kPi / 2, Y);
}

// Local corrections around exp(-i H_toff) that give the Toffoli gate.
void append_toffoli_pre(PulseSequence& s) {
  s.hard({1, 2}, -kPi / 4, Z).hard({3}, -kPi / 4, X);
  s.hard({1}, -kPi, X).hard({2}, -kPi, X).hard({3}, -kPi, Z);
}

void append_toffoli_post(PulseSequence& s) {
  s.hard({1}, kPi, X).hard({2}, kPi, X).hard({3}, kPi, Z);
}

Realization make(std::string label, GateTarget target, PulseSequence seq) {
  seq.name = label;
  const double d = seq.nominal_duration();
  return {std::move(label), target, std::move(seq), d};
}

Realization make(std::string label, GateTarget target, Factorization f) {
  const double d = f.duration();
  return {std::move(label), target, std::move(f), d};
}

Factor local(std::string label, OperatorMatrix g) { return {std::move(label), std::move(g), 0.0}; }

// CNOT(1,3) = U_c U13 U_a around an inner factor list realizing U13.
Factorization cnot_around_u13(const std::vector<Factor>& u13) {
  Factorization f;
  f.factors.push_back(local("U_a", kPi / 2 * I(3, Y)));
  f.factors.insert(f.factors.end(), u13.begin(), u13.end());
  f.factors.push_back(local("U_c:x3", kPi / 2 * I(3, X)));
  f.factors.push_back(local("U_c:z1-z3", kPi / 2 * (I(1, Z) - I(3, Z))));
  return f;
}

// U13 = e^{-iH1} U_zzy e^{iH1}.
std::vector<Factor> u13_around_zzy(const std::vector<Factor>& zzy) {
  const OperatorMatrix h1 = kPi / 2 * op("1zx");
  std::vector<Factor> v;
  v.push_back({"exp(+iH1)", -h1, 0.5});
  v.insert(v.end(), zzy.begin(), zzy.end());
  v.push_back({"exp(-iH1)", h1, 0.5});
  return v;
}

BroadbandGate parse_bb(const std::string& name) {
  if (name == "BB_U13") return BroadbandGate::U13;
  if (name == "BB_SQRT13") return BroadbandGate::SQRT_U13;
  if (name == "BB_TOFF") return BroadbandGate::TOFFOLI;
  throw std::invalid_argument("unknown broadband label: " + name);
}

const char* bb_name(BroadbandGate g) {
  switch (g) {
    case BroadbandGate::U13: return "BB_U13";
    case BroadbandGate::SQRT_U13: return "BB_SQRT13";
    case BroadbandGate::TOFFOLI: return "BB_TOFF";
  }
  return "BB";
}

}  // namespace

// ---------------------------------------------------------------------------

std::string GateTarget::name() const {
  switch (kind) {
    case GateKind::CNOT13: return "CNOT13";
    case GateKind::U13: return "U13";
    case GateKind::SQRT_U13: return "SQRT_U13";
    case GateKind::U13S: return "U13S";
    case GateKind::U_ZZY: return "U_ZZY";
    case GateKind::U_ZYZ: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "U_ZYZ(%.6g)", kappa);
      return buf;
    }
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::H_TOFF: return "H_TOFF";
  }
  return "?";
}

OperatorMatrix GateTarget::matrix() const {
  const OperatorMatrix half = 0.5 * OperatorMatrix::Identity();
  switch (kind) {
    case GateKind::CNOT13:
      return exp_i(kPi / 2 * (op("z1x") - I(1, Z) - I(3, X) + half));
    case GateKind::U13: return exp_i(kPi / 2 * op("z1z"));
    case GateKind::SQRT_U13: return exp_i(kPi / 4 * op("z1z"));
    case GateKind::U13S: return exp_i(kPi / 2 * (I(1, Z) + I(3, Z) + op("z1z")));
    case GateKind::U_ZZY: return exp_i(kPi / 2 * op("zzy"));
    case GateKind::U_ZYZ: return exp_i(kPi * kappa / 2 * op("zyz"));
    case GateKind::TOFFOLI: {
      const OperatorMatrix g = (half - I(1, Z)) * (half - I(2, Z)) * (half - I(3, X));
      return exp_i(kPi * g);
    }
    case GateKind::H_TOFF:
      return exp_i(kPi / 4 * (op("zz1") + op("1zx") + op("z1x") + op("zzx")));
  }
  throw std::logic_error("unknown gate");
}

double Factorization::duration() const {
  double total = 0.0;
  for (const auto& f : factors) total += f.cost;
  return total;
}

OperatorMatrix Factorization::product() const {
  OperatorMatrix u = OperatorMatrix::Identity();
  for (const auto& f : factors) u = multiply(exp_i(f.generator), u);
  return u;
}

const PulseSequence& Realization::sequence() const {
  if (const auto* s = std::get_if<PulseSequence>(&form)) return *s;
  throw std::invalid_argument(label + " is a propagator factorization, not a pulse sequence");
}

Propagator compile(const Realization& r, const CouplingTopology& topology) {
  if (const auto* s = std::get_if<PulseSequence>(&r.form)) return compile(*s, topology);
  const auto& f = std::get<Factorization>(r.form);
  return {f.product(), f.duration()};
}

const GeodesicSolution& cnot_geodesic() {
  static const GeodesicSolution s = search_constant_u(PhiTarget{kPi / 4});
  return s;
}

// ---------------------------------------------------------------------------
// Pulse level.

Realization u13_geodesic() {
  PulseSequence s;
  append_u13g_core(s);
  return make("U13G", {GateKind::U13S}, std::move(s));
}

Realization u13_from_geodesic() {
  PulseSequence s;
  append_u13g_core(s);
  append_u_b(s);
  return make("U13", {GateKind::U13}, std::move(s));
}

Realization cnot13_from_geodesic() {
  PulseSequence s;
  s.hard({3}, kPi / 2, Y);
  append_u13g_core(s);
  append_u_b(s);
  s.hard({3}, kPi / 2, X).hard({1}, kPi / 2, Z).hard({3}, -kPi / 2, Z);
  return make("C5", {GateKind::CNOT13}, std::move(s));
}

Realization trilinear_propagator(double kappa, const std::string& axes) {
  if (!(kappa >= 0.0 && kappa <= 2.0)) throw std::invalid_argument("kappa must lie in [0, 2]");
  if (axes.size() != 3) throw std::invalid_argument("axes must have three characters");
  PauliAxis a[3];
  for (int k = 0; k < 3; ++k) {
    a[k] = axis_from_char(axes[k]);
    if (a[k] == PauliAxis::identity) throw std::invalid_argument("axes must be x, y or z");
  }
  PulseSequence s;
  GateTarget target{GateKind::U_ZYZ, kappa};
  if (kappa == 0.0) return make("TRI(" + axes + ")", target, std::move(s));

  const double tau = tau_kappa(kappa).tau;
  const double u = (2.0 - kappa) / tau;
  const PauliAxis base[3] = {Z, Y, Z};
  for (int k = 0; k < 3; ++k) frame(s, k + 1, base[k], a[k], -1.0);
  s.weak(2, u / 2, Y, tau).hard({2}, kPi * kappa / 2, Y);
  for (int k = 0; k < 3; ++k) frame(s, k + 1, base[k], a[k], 1.0);
  return make("TRI(" + axes + ")", target, std::move(s));
}

Realization sqrt_u13() {
  // R exp(-i(pi/2)2I2zI3y) exp(-i(pi/4)4I1zI2zI3z) exp(+i(pi/2)2I2zI3y) R^dag with
  // R = exp(+i(pi/2)I3y) turning the 2I1zI3x product into 2I1zI3z.
  PulseSequence s;
  s.hard({3}, kPi / 2, Y);
  s.hard({3}, -kPi / 2, X);
  append_coupling_23(s, 0.5);
  s.hard({3}, kPi / 2, X);
  s.then(trilinear_propagator(0.5, "zzz").sequence());
  s.hard({3}, kPi / 2, X);
  append_coupling_23(s, 0.5);
  s.hard({3}, -kPi / 2, X);
  s.hard({3}, -kPi / 2, Y);
  return make("SQRT13", {GateKind::SQRT_U13}, std::move(s));
}

Realization toffoli_core() {
  // Y3 U1 U2 U3 U1^dag U4 Y3^dag, Y3 = exp(-i(pi/2)I3y).
  PulseSequence s;
  s.hard({3}, -kPi / 2, Y);
  s.delay(0.25);
  append_u1(s, -1.0);
  s.hard({2}, kPi / 2, X);
  append_coupling_12(s, 0.25);
  s.hard({2}, -kPi / 2, X);
  s.then(trilinear_propagator(0.5, "yxz").sequence());
  append_u1(s, 1.0);
  s.hard({3}, kPi / 2, Y);
  return make("T6_CORE", {GateKind::H_TOFF}, std::move(s));
}

Realization toffoli(ToffoliVariant variant) {
  if (variant == ToffoliVariant::T6) {
    PulseSequence s;
    append_toffoli_pre(s);
    s.then(toffoli_core().sequence());
    append_toffoli_post(s);
    return make("T6", {GateKind::TOFFOLI}, std::move(s));
  }
  if (variant != ToffoliVariant::T5) throw std::invalid_argument("unknown Toffoli variant");
  Factorization f;
  f.factors.push_back(local("local:z1z2x3", -kPi / 4 * (I(1, Z) + I(2, Z) + I(3, X))));
  f.factors.push_back(local("R^dag", -kPi * (I(1, X) + I(2, X) + I(3, Z))));
  f.factors.push_back({"chain(pi/4)", kPi / 4 * (op("zz1") + op("1zx")), 0.25});
  f.factors.push_back({"trilinear(pi/4)", kPi / 4 * op("zzx"), trilinear_propagator(0.5).duration});
  f.factors.push_back({"sqrt13(pi/4)", kPi / 4 * op("z1x"), sqrt_u13().duration});
  f.factors.push_back(local("R", kPi * (I(1, X) + I(2, X) + I(3, Z))));
  return make("T5", {GateKind::TOFFOLI}, std::move(f));
}

// ---------------------------------------------------------------------------
// Factorization level.

Realization conventional_cnot13(ConventionalVariant variant) {
  switch (variant) {
    case ConventionalVariant::C1: {
      const OperatorMatrix swap = kPi / 2 * (op("xx1") + op("yy1") + op("zz1"));
      Factorization f;
      f.factors.push_back({"SWAP12", swap, 1.5});
      f.factors.push_back(local("CNOT23:local", -kPi / 2 * (I(2, Z) + I(3, X))));
      f.factors.push_back({"CNOT23:coupling", kPi / 2 * op("1zx"), 0.5});
      f.factors.push_back({"SWAP12", swap, 1.5});
      return make("C1", {GateKind::CNOT13}, std::move(f));
    }
    case ConventionalVariant::C2: {
      const OperatorMatrix h2 = kPi / 2 * op("1xy");
      std::vector<Factor> zzy{{"exp(+iH2)", -h2, 0.5},
                              {"exp(-i(pi/2)2I1zI2y)", kPi / 2 * op("zy1"), 0.5},
                              {"exp(-iH2)", h2, 0.5}};
      return make("C2", {GateKind::CNOT13}, cnot_around_u13(u13_around_zzy(zzy)));
    }
    case ConventionalVariant::C3: {
      const OperatorMatrix h3x = kPi / 4 * (op("zx1") + op("1xy"));
      const OperatorMatrix h3y = kPi / 4 * (op("zy1") + op("1yy"));
      std::vector<Factor> zzy{{"exp(+iH3x)", -h3x, 0.25},
                              {"exp(-2iH3y)", 2.0 * h3y, 0.5},
                              {"exp(-iH3x)", h3x, 0.25},
                              local("exp(+i(pi/2)I2z)", -kPi / 2 * I(2, Z))};
      return make("C3", {GateKind::CNOT13}, cnot_around_u13(u13_around_zzy(zzy)));
    }
    case ConventionalVariant::C4: {
      const double r3 = std::sqrt(3.0);
      const OperatorMatrix m = r3 * kPi / 2 * (op("zx1") + op("1xy") + 2.0 / r3 * I(2, Z));
      std::vector<Factor> zzy{local("exp(-i pi I2z)", kPi * I(2, Z)),
                              {"exp(-i(sqrt3 pi/2)H4)", m, r3 / 2},
                              local("exp(+i(pi/2)I2z)", -kPi / 2 * I(2, Z))};
      return make("C4", {GateKind::CNOT13}, cnot_around_u13(u13_around_zzy(zzy)));
    }
  }
  throw std::invalid_argument("unknown conventional variant");
}

// ---------------------------------------------------------------------------
// Broadband.

BroadbandParameters broadband_parameters(BroadbandGate gate, int m) {
  if (m < 1) throw std::invalid_argument("repetition count m must be at least 1");
  double tau = 0.0, amplitude = 0.0;
  if (gate == BroadbandGate::U13) {
    tau = cnot_geodesic().tau;
    amplitude = cnot_geodesic().u / 2;
  } else {
    tau = tau_kappa(0.5).tau;
    amplitude = (2.0 - 0.5) / tau / 2;
  }
  const double delta = tau / (4.0 * m);
  return {delta, 2.0 * kPi * amplitude * delta, 4 * m};
}

Realization broadband_variant(BroadbandGate gate, int m) {
  if (m < 1) throw std::invalid_argument("repetition count m must be at least 1");
  Realization base = gate == BroadbandGate::U13        ? u13_from_geodesic()
                     : gate == BroadbandGate::SQRT_U13 ? sqrt_u13()
                                                       : toffoli(ToffoliVariant::T6);
  PulseSequence out;
  for (const auto& event : base.sequence().events) {
    if (const auto* w = std::get_if<WeakPulse>(&event)) {
      const double d = w->duration / (4.0 * m);
      const double flip = 2.0 * kPi * w->amplitude * d;
      for (int k = 0; k < 4 * m; ++k) {
        // Each pi_x inverts y and z, so the y (or z) phase alternates.
        const double sign = (w->phase == X || k % 2 == 0) ? 1.0 : -1.0;
        out.delay(d / 2, w->couplings).hard({w->target}, sign * flip, w->phase).delay(d / 2, w->couplings);
        out.hard({1, 2, 3}, kPi, X);
      }
    } else if (const auto* dl = std::get_if<Delay>(&event)) {
      out.delay(dl->duration / 2, dl->couplings).hard({1, 2, 3}, kPi, X);
      out.delay(dl->duration / 2, dl->couplings).hard({1, 2, 3}, kPi, X);
    } else {
      out.events.push_back(event);
    }
  }
  return make(std::string(bb_name(gate)) + "(" + std::to_string(m) + ")", base.target, std::move(out));
}

// Twice the zero-offset infidelity observed at m = 2 (2.4665e-5 and 1.0140e-4).
double broadband_zero_offset_bound(BroadbandGate gate) {
  switch (gate) {
    case BroadbandGate::U13: return 4.94e-5;
    case BroadbandGate::SQRT_U13: return 2.03e-4;
    case BroadbandGate::TOFFOLI: return 2.03e-4;
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Selective rotations.

double selective_delay_s(double flip, double delta_nu13) {
  if (!std::isfinite(delta_nu13) || delta_nu13 == 0.0)
    throw std::invalid_argument("frequency difference must be nonzero");
  return std::abs(flip) / (2.0 * kPi * std::abs(delta_nu13));
}

PulseSequence selective_pulse_emulation(int target_qubit, double flip, PauliAxis phase,
                                        double delta_nu13, double unit_hz) {
  if (target_qubit != 1 && target_qubit != 3) throw std::invalid_argument("target qubit must be 1 or 3");
  if (phase == PauliAxis::identity) throw std::invalid_argument("phase must be x, y or z");
  if (!(unit_hz > 0.0)) throw std::invalid_argument("unit_hz must be positive");
  if (!std::isfinite(flip)) throw std::invalid_argument("flip angle must be finite");
  const double delay = selective_delay_s(flip, delta_nu13) * unit_hz;

  PulseSequence s;
  s.name = "SEL" + std::to_string(target_qubit) + axis_char(phase);
  if (flip == 0.0) return s;
  if (target_qubit == 1) {
    s.hard({1, 3}, flip, phase);
    s.then(selective_pulse_emulation(3, -flip, phase, delta_nu13, unit_hz));
    s.name = "SEL1" + std::string(1, axis_char(phase));
    return s;
  }
  // Offset precession of spin 3 turns by sign(dnu) |flip| about z; the
  // 90-degree sandwich moves that axis onto +-phase.
  const double sign = (flip > 0.0) == (delta_nu13 > 0.0) ? 1.0 : -1.0;
  PauliAxis outer = X;
  double angle = 0.0;
  if (phase == Y) angle = sign * kPi / 2;
  else if (phase == X) { outer = Y; angle = -sign * kPi / 2; }
  else if (sign < 0.0) angle = kPi;

  if (angle != 0.0) s.hard({1, 3}, angle, outer);
  s.delay(delay / 2).hard({2}, kPi, X).delay(delay / 2).hard({2}, kPi, X);
  if (angle != 0.0) s.hard({1, 3}, -angle, outer);
  return s;
}

SelectiveReport selective_pulse_report(int target_qubit, double flip, PauliAxis phase,
                                       const CouplingTopology& topology) {
  CouplingTopology t = topology;
  const double dnu = topology.nu3 - topology.nu1;
  t.nu3 = dnu;
  t.nu1 = 0.0;
  SelectiveReport r;
  r.sequence = selective_pulse_emulation(target_qubit, flip, phase, dnu, t.unit_hz);
  r.delay_s = selective_delay_s(flip, dnu);
  const OperatorMatrix ideal = exp_i(flip * spin_op(target_qubit, phase));
  PulseSequence frozen = r.sequence;
  for (auto& e : frozen.events)
    if (auto* d = std::get_if<Delay>(&e)) d->couplings = false;
  r.fidelity_uncoupled = gate_fidelity(compile(frozen, t).matrix, ideal);
  r.fidelity_coupled = gate_fidelity(compile(r.sequence, t).matrix, ideal);
  return r;
}

// ---------------------------------------------------------------------------
// Ledger.

std::vector<DurationRow> duration_table() {
  const double c1 = conventional_cnot13(ConventionalVariant::C1).duration;
  const double c5 = cnot13_from_geodesic().duration;
  const double sqrt13 = sqrt_u13().duration;
  // Toffoli circuits: four direct CNOTs (0.5 each) plus two CNOT(1,3), or two
  // direct CNOTs, two 0.25 couplings and one sqrt(U13).
  const double t1 = 4 * 0.5 + 2 * c1;
  std::vector<DurationRow> rows{
      {"C1", "SWAP(1,2) CNOT(2,3) SWAP(1,2)", c1, 0},
      {"C2", "U13 from U_zzy, conventional", conventional_cnot13(ConventionalVariant::C2).duration, 0},
      {"C3", "U_zzy from H3x, H3y", conventional_cnot13(ConventionalVariant::C3).duration, 0},
      {"C4", "time-optimal U_zzy", conventional_cnot13(ConventionalVariant::C4).duration, 0},
      {"C5", "geodesic U13", c5, 0},
      {"T1", "six-CNOT circuit with C1", t1, 0},
      {"T2", "six-CNOT circuit with C5", 4 * 0.5 + 2 * c5, 0},
      {"T3", "Sleator-Weinfurter, SWAP-based sqrt(U13)", 2 * 0.5 + 2 * 0.25 + 3.25, 0},
      {"T4", "Sleator-Weinfurter, geodesic sqrt(U13)", 2 * 0.5 + 2 * 0.25 + sqrt13, 0},
      {"T5", "H_toff term by term", toffoli(ToffoliVariant::T5).duration, 0},
      {"T6", "U1 U2 U3 U1^dag U4", toffoli(ToffoliVariant::T6).duration, 0},
  };
  for (auto& r : rows) r.relative = 100.0 * r.duration / (r.label[0] == 'C' ? c1 : t1);
  return rows;
}

std::vector<std::string> realization_labels() {
  return {"C1", "C2", "C3", "C4", "C5", "T5", "T6", "SQRT13", "U13", "U13G",
          "BB_U13", "BB_SQRT13", "BB_TOFF"};
}

Realization realization(const std::string& label, int m) {
  if (label == "C1") return conventional_cnot13(ConventionalVariant::C1);
  if (label == "C2") return conventional_cnot13(ConventionalVariant::C2);
  if (label == "C3") return conventional_cnot13(ConventionalVariant::C3);
  if (label == "C4") return conventional_cnot13(ConventionalVariant::C4);
  if (label == "C5") return cnot13_from_geodesic();
  if (label == "T5") return toffoli(ToffoliVariant::T5);
  if (label == "T6") return toffoli(ToffoliVariant::T6);
  if (label == "SQRT13") return sqrt_u13();
  if (label == "U13") return u13_from_geodesic();
  if (label == "U13G") return u13_geodesic();
  if (label.rfind("BB_", 0) == 0) {
    std::string name = label;
    if (const auto open = label.find('('); open != std::string::npos) {
      if (label.back() != ')') throw std::invalid_argument("malformed label: " + label);
      name = label.substr(0, open);
      const std::string count = label.substr(open + 1, label.size() - open - 2);
      std::size_t used = 0;
      try {
        m = std::stoi(count, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (count.empty() || used != count.size()) throw std::invalid_argument("malformed label: " + label);
    }
    return broadband_variant(parse_bb(name), m);
  }
  throw std::invalid_argument("unknown realization label: " + label);
}

GateCheck verify_realization(const Realization& r, double tol) {
  const Propagator u = compile(r, CouplingTopology::ideal());
  const OperatorMatrix target = r.target.matrix();
  GateCheck c;
  c.label = r.label;
  c.target = r.target.name();
  c.duration = r.duration;
  c.fidelity = gate_fidelity(u.matrix, target);
  c.infidelity = 1.0 - c.fidelity;
  c.unitarity_deviation = u.unitarity_deviation();
  c.tolerance = tol;
  if (r.label == "U13G") {
    const auto match = conjugation_match(u.matrix, target, subspace_13(), tol);
    c.subspace_deviation = match.max_deviation;
    c.pass = match.match;
  } else {
    c.pass = c.infidelity <= tol;
  }
  return c;
}

}  // namespace isinggate
