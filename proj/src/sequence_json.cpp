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

#include "isinggate/sequence_json.hpp"

#include <json.hpp>
#include <stdexcept>

namespace isinggate {

namespace {

using ojson = nlohmann::ordered_json;

std::string phase_str(PauliAxis a) { return std::string(1, axis_char(a)); }

PauliAxis phase_from(const ojson& j) {
  const auto s = j.get<std::string>();
  if (s.size() != 1 || s == "1") throw std::invalid_argument("phase must be \"x\", \"y\" or \"z\"");
  return axis_from_char(s[0]);
}

ojson event_json(const PulseEvent& event) {
  ojson j;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, HardPulse>) {
          j["type"] = "hard";
          j["targets"] = e.targets;
          j["phase"] = phase_str(e.phase);
          j["flip_rad"] = e.flip;
        } else if constexpr (std::is_same_v<T, WeakPulse>) {
          j["type"] = "weak";
          j["targets"] = std::vector<int>{e.target};
          j["phase"] = phase_str(e.phase);
          j["amplitude_J"] = e.amplitude;
          j["duration_invJ"] = e.duration;
          j["couplings"] = e.couplings;
        } else if constexpr (std::is_same_v<T, Delay>) {
          j["type"] = "delay";
          j["duration_invJ"] = e.duration;
          j["couplings"] = e.couplings;
        } else {
          j["type"] = "zrot";
          j["targets"] = std::vector<int>{e.target};
          j["phase"] = "z";
          j["flip_rad"] = e.angle;
        }
      },
      event);
  return j;
}

int single_target(const ojson& e) {
  const auto t = e.at("targets").get<std::vector<int>>();
  if (t.size() != 1) throw std::invalid_argument("event needs exactly one target");
  return t.front();
}

}  // namespace

std::string to_json(const PulseSequence& seq, int indent) {
  ojson j;
  j["name"] = seq.name;
  j["events"] = ojson::array();
  for (const auto& e : seq.events) j["events"].push_back(event_json(e));
  return j.dump(indent) + "\n";
}

PulseSequence sequence_from_json(const std::string& text) {
  PulseSequence seq;
  try {
    const auto j = ojson::parse(text);
    seq.name = j.value("name", "");
    for (const auto& e : j.at("events")) {
      const auto type = e.at("type").get<std::string>();
      if (type == "hard") {
        seq.hard(e.at("targets").get<std::vector<int>>(), e.at("flip_rad").get<double>(),
                 phase_from(e.at("phase")));
      } else if (type == "weak") {
        seq.weak(single_target(e), e.at("amplitude_J").get<double>(), phase_from(e.at("phase")),
                 e.at("duration_invJ").get<double>(), e.value("couplings", true));
      } else if (type == "delay") {
        seq.delay(e.at("duration_invJ").get<double>(), e.value("couplings", true));
      } else if (type == "zrot") {
        seq.zrot(single_target(e), e.at("flip_rad").get<double>());
      } else {
        throw std::invalid_argument("unknown event type '" + type + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed pulse sequence JSON: ") + ex.what());
  }
  validate(seq);
  return seq;
}

}  // namespace isinggate
