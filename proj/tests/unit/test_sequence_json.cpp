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

#include <algorithm>
#include <numbers>

#include "isinggate/sequence_json.hpp"
#include "isinggate/sequences.hpp"

using namespace isinggate;

TEST_CASE("sequence JSON round trip preserves the propagator") {
  for (const char* label : {"C5", "SQRT13", "T6", "U13G", "BB_U13(1)"}) {
    const Realization r = realization(label);
    const PulseSequence& s = r.sequence();
    const std::string text = to_json(s);
    const PulseSequence back = sequence_from_json(text);
    CHECK(back.name == s.name);
    REQUIRE(back.events.size() == s.events.size());
    const auto a = compile(s, CouplingTopology::ideal()).matrix;
    const auto b = compile(back, CouplingTopology::ideal()).matrix;
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("sequence JSON is deterministic and carries every event type") {
  PulseSequence s;
  s.name = "mixed";
  s.hard({1, 3}, std::numbers::pi / 2, PauliAxis::y)
      .weak(2, 0.5, PauliAxis::x, 0.25, false)
      .delay(0.125)
      .zrot(1, -0.3);
  const std::string a = to_json(s), b = to_json(s);
  CHECK(a == b);
  for (const char* key : {"\"hard\"", "\"weak\"", "\"delay\"", "\"zrot\"", "\"couplings\": false"})
    CHECK(a.find(key) != std::string::npos);
  const std::string compact = to_json(s, -1);
  CHECK(std::count(compact.begin(), compact.end(), '\n') == 1);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(sequence_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(R"({"events": [{"type": "warp"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(R"({"events": [{"type": "delay"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(R"({"events": [{"type": "hard", "targets": [1], "phase": "q", "flip_rad": 1}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(R"({"events": [{"type": "delay", "duration_invJ": -1}]})"),
                  std::invalid_argument);
}
