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
#include <numbers>

#include "../oracle.hpp"
#include "isinggate/sequences.hpp"

using namespace isinggate;
using std::numbers::pi;

namespace {

// Basis index 4 b1 + 2 b2 + b3, qubit 1 leftmost.
oracle::M8 controlled_not3(bool two_controls) {
  oracle::M8 m = oracle::M8::Zero();
  for (int i = 0; i < 8; ++i) {
    const bool b1 = (i >> 2) & 1, b2 = (i >> 1) & 1;
    const bool flip = two_controls ? (b1 && b2) : b1;
    m(flip ? i ^ 1 : i, i) = 1.0;
  }
  return m;
}

oracle::M8 oracle_target(const GateTarget& t) {
  switch (t.kind) {
    case GateKind::CNOT13: return controlled_not3(false);
    case GateKind::TOFFOLI: return controlled_not3(true);
    case GateKind::U13: return oracle::expm_i(pi / 2 * oracle::product("z1z"));
    case GateKind::SQRT_U13: return oracle::expm_i(pi / 4 * oracle::product("z1z"));
    case GateKind::U13S:
      return oracle::expm_i(pi / 2 * (oracle::single(1, 'z') + oracle::single(3, 'z') + oracle::product("z1z")));
    case GateKind::U_ZZY: return oracle::expm_i(pi / 2 * oracle::product("zzy"));
    case GateKind::U_ZYZ: return oracle::expm_i(pi * t.kappa / 2 * oracle::product("zyz"));
    case GateKind::H_TOFF:
      return oracle::expm_i(pi / 4 *
                            (oracle::product("zz1") + oracle::product("1zx") + oracle::product("z1x") +
                             oracle::product("zzx")));
  }
  return oracle::M8::Identity();
}

}  // namespace

TEST_CASE("gate targets agree with independent constructions") {
  for (auto k : {GateKind::CNOT13, GateKind::U13, GateKind::SQRT_U13, GateKind::U13S, GateKind::U_ZZY,
                 GateKind::U_ZYZ, GateKind::TOFFOLI, GateKind::H_TOFF}) {
    const GateTarget t{k, 0.7};
    CHECK(1.0 - oracle::fidelity(t.matrix(), oracle_target(t)) < 1e-13);
  }
}

TEST_CASE("every realization reproduces its target") {
  for (const auto& label : realization_labels()) {
    if (label.rfind("BB_", 0) == 0) continue;
    const Realization r = realization(label);
    const auto u = compile(r).matrix;
    if (label == "U13G") {
      const auto m = conjugation_match(u, oracle_target(r.target), subspace_13());
      CHECK_MESSAGE(m.match, label);
    } else {
      CHECK_MESSAGE(1.0 - oracle::fidelity(u, oracle_target(r.target)) < 1e-12, label);
    }
    const auto c = verify_realization(r, 1e-9);
    CHECK_MESSAGE(c.pass, label);
    CHECK(c.unitarity_deviation < 1e-12);
  }
}

TEST_CASE("trilinear propagator for several kappa and axis choices") {
  for (double kappa : {0.25, 0.5, 1.0, 1.5, 2.0})
    for (const char* axes : {"zyz", "zzz", "yxz", "xzy"}) {
      const Realization r = trilinear_propagator(kappa, axes);
      const auto want = oracle::expm_i(pi * kappa / 2 * oracle::product(axes));
      CHECK(1.0 - oracle::fidelity(compile(r).matrix, want) < 1e-12);
      CHECK(r.duration == doctest::Approx(tau_kappa(kappa).tau).epsilon(1e-14));
    }
  CHECK(trilinear_propagator(0.0).sequence().events.empty());
  CHECK_THROWS_AS(trilinear_propagator(2.5), std::invalid_argument);
  CHECK_THROWS_AS(trilinear_propagator(1.0, "z1z"), std::invalid_argument);
}

TEST_CASE("realization durations") {
  const double tau = 0.6267379455, tau_half = std::sqrt(0.5 * 3.5) / 2;
  CHECK(realization("C1").duration == doctest::Approx(3.5));
  CHECK(realization("C2").duration == doctest::Approx(2.5));
  CHECK(realization("C3").duration == doctest::Approx(2.0));
  CHECK(realization("C4").duration == doctest::Approx(1.0 + std::sqrt(3.0) / 2));
  CHECK(realization("C5").duration == doctest::Approx(2 * tau).epsilon(1e-8));
  CHECK(realization("U13").duration == doctest::Approx(2 * tau).epsilon(1e-8));
  CHECK(realization("SQRT13").duration == doctest::Approx(1.0 + tau_half));
  CHECK(realization("T5").duration == doctest::Approx(0.25 + tau_half + 1.0 + tau_half));
  CHECK(realization("T6").duration == doctest::Approx(1.5 + tau_half));
  for (const auto& label : realization_labels()) {
    const Realization r = realization(label, 1);
    if (r.pulse_level()) CHECK(r.duration == doctest::Approx(duration(r.sequence())).epsilon(1e-14));
  }
  CHECK_THROWS_AS(realization("C9"), std::invalid_argument);
  CHECK_THROWS_AS(realization("C1").sequence(), std::invalid_argument);
}

TEST_CASE("duration table") {
  const auto rows = duration_table();
  REQUIRE(rows.size() == 11);
  CHECK(rows[0].label == "C1");
  CHECK(rows[0].relative == doctest::Approx(100.0));
  CHECK(rows[5].label == "T1");
  CHECK(rows[5].duration == doctest::Approx(9.0));
  CHECK(rows[6].duration == doctest::Approx(2.0 + rows[4].duration * 2));
  CHECK(rows[7].duration == doctest::Approx(4.75));
  for (std::size_t i = 1; i < 5; ++i) CHECK(rows[i].duration < rows[i - 1].duration);
  for (const auto& r : rows) {
    const double ref = r.label[0] == 'C' ? rows[0].duration : rows[5].duration;
    CHECK(r.relative == doctest::Approx(100.0 * r.duration / ref));
  }
}

TEST_CASE("broadband parameters") {
  const double tau = 0.6267379455, u = 1.0400564429;
  for (int m : {1, 2, 3, 8}) {
    const auto p = broadband_parameters(BroadbandGate::U13, m);
    CHECK(p.segments == 4 * m);
    CHECK(p.segment_delay == doctest::Approx(tau / (4 * m)).epsilon(1e-9));
    CHECK(p.flip == doctest::Approx(pi * u * tau / (4 * m)).epsilon(1e-9));
    const auto q = broadband_parameters(BroadbandGate::SQRT_U13, m);
    CHECK(q.flip == doctest::Approx(3 * pi / (8 * m)).epsilon(1e-14));
    CHECK(q.segment_delay * m == doctest::Approx(std::sqrt(1.75) / 8));
  }
  CHECK_THROWS_AS(broadband_parameters(BroadbandGate::U13, 0), std::invalid_argument);
  CHECK_THROWS_AS(broadband_variant(BroadbandGate::TOFFOLI, 0), std::invalid_argument);
}

TEST_CASE("broadband variants converge with m") {
  for (auto g : {BroadbandGate::U13, BroadbandGate::SQRT_U13, BroadbandGate::TOFFOLI}) {
    double previous = 1.0;
    for (int m : {1, 2, 4}) {
      const Realization r = broadband_variant(g, m);
      const double inf = 1.0 - oracle::fidelity(compile(r).matrix, oracle_target(r.target));
      CHECK(inf < previous);
      previous = inf;
      if (m == 2) CHECK(inf <= broadband_zero_offset_bound(g));
    }
  }
  CHECK(realization("BB_U13(4)").label == "BB_U13(4)");
  CHECK(realization("BB_TOFF", 3).label == "BB_TOFF(3)");
}

TEST_CASE("broadband U13 tolerates resonance offsets better than the plain sequence") {
  auto topo = CouplingTopology::ideal();
  topo.nu1 = 0.05;
  topo.nu3 = -0.05;
  const auto want = GateTarget{GateKind::U13}.matrix();
  const double plain = 1.0 - gate_fidelity(compile(realization("U13"), topo).matrix, want);
  const double bb = 1.0 - gate_fidelity(compile(realization("BB_U13", 2), topo).matrix, want);
  CHECK(bb < plain);
}

TEST_CASE("selective pulse emulation") {
  CHECK(selective_delay_s(pi / 2, 310.0) * 1e6 == doctest::Approx(806.45).epsilon(1e-5));
  CHECK(selective_delay_s(pi / 2, 310.0) == doctest::Approx(1.0 / (4 * 310.0)));
  CHECK_THROWS_AS(selective_delay_s(pi / 2, 0.0), std::invalid_argument);
  CHECK(selective_pulse_emulation(3, 0.0, PauliAxis::y, 310.0).events.empty());

  auto free = CouplingTopology::zero();
  free.nu3 = 310.0;
  free.unit_hz = 88.0;
  const auto u = compile(selective_pulse_emulation(3, pi / 2, PauliAxis::y, 310.0), free).matrix;
  CHECK((conjugate(u, oracle::single(3, 'z')) - oracle::single(3, 'x')).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((conjugate(u, oracle::single(1, 'z')) - oracle::single(1, 'z')).cwiseAbs().maxCoeff() < 1e-12);

  for (int q : {1, 3})
    for (auto phase : {PauliAxis::x, PauliAxis::y, PauliAxis::z})
      for (double flip : {pi / 2, -pi / 3, pi}) {
        const auto r = selective_pulse_report(q, flip, phase, free);
        CHECK(r.fidelity_uncoupled == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.fidelity_coupled == doctest::Approx(1.0).epsilon(1e-12));
      }

  const auto coupled = selective_pulse_report(1, pi / 2, PauliAxis::y, CouplingTopology::acetamide());
  CHECK(coupled.fidelity_uncoupled == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(coupled.fidelity_coupled > 0.9999);
  CHECK_THROWS_AS(selective_pulse_emulation(2, pi / 2, PauliAxis::y, 310.0), std::invalid_argument);
}
