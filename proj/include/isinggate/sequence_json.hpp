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

// PulseSequence <-> JSON.
//
//   {"name": str,
//    "events": [{"type": "hard"|"weak"|"delay"|"zrot", "targets": [..],
//                "phase": "x"|"y"|"z", "flip_rad": num, "amplitude_J": num,
//                "duration_invJ": num, "couplings": bool}]}
//
// Fields irrelevant to an event type are omitted. Field order is fixed as
// above and numbers are written with round-trip precision.

#include <string>

#include "isinggate/propagator.hpp"

namespace isinggate {

std::string to_json(const PulseSequence& seq, int indent = 2);

/// Throws std::invalid_argument on malformed input.
PulseSequence sequence_from_json(const std::string& text);

}  // namespace isinggate
