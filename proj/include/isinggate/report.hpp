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

// Text renderings of ledger rows, gate checks, geodesic solutions,
// trajectories and spectra. Output is deterministic and newline-terminated.

#include <optional>
#include <string>
#include <vector>

#include "isinggate/geodesic.hpp"
#include "isinggate/nmr.hpp"
#include "isinggate/sequences.hpp"

namespace isinggate::report {

enum class Format { md, csv, json };

/// Throws std::invalid_argument for anything but "md", "csv" or "json".
Format format_from_string(const std::string& s);

/// j_hz adds a duration_s column (duration / J).
std::string duration_table(const std::vector<DurationRow>& rows, Format format,
                           std::optional<double> j_hz = std::nullopt);

std::string gate_checks(const std::vector<GateCheck>& checks, Format format);

std::string state_checks(const std::vector<StateCheck>& checks, Format format);

std::string geodesic(const GeodesicTarget& target, const GeodesicSolution& s,
                     std::optional<double> j_hz = std::nullopt);

/// t_invJ,x,y,z rows.
std::string trajectory_csv(std::span<const SphereState> path, double dt);

/// freq_Hz,real,imag rows.
std::string spectrum_csv(const Spectrum& s);

}  // namespace isinggate::report
