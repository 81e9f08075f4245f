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

#include "isinggate/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace isinggate::report {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string pass_text(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "md") return Format::md;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + s);
}

std::string duration_table(const std::vector<DurationRow>& rows, Format format, std::optional<double> j_hz) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ojson a = ojson::array();
      for (const auto& r : rows) {
        ojson j;
        j["label"] = r.label;
        j["description"] = r.description;
        j["duration_invJ"] = r.duration;
        j["relative_percent"] = r.relative;
        if (j_hz) j["duration_s"] = r.duration / *j_hz;
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "label,description,duration_invJ,relative_percent" << (j_hz ? ",duration_s" : "") << "\n";
      for (const auto& r : rows) {
        os << r.label << ",\"" << r.description << "\"," << num(r.duration) << "," << num(r.relative);
        if (j_hz) os << "," << num(r.duration / *j_hz);
        os << "\n";
      }
      return os.str();
    case Format::md:
      os << "| label | implementation | duration (1/J) | relative |" << (j_hz ? " duration (s) |" : "") << "\n";
      os << "|---|---|---|---|" << (j_hz ? "---|" : "") << "\n";
      for (const auto& r : rows) {
        os << "| " << r.label << " | " << r.description << " | " << fixed(r.duration, 3) << " | "
           << fixed(r.relative, 1) << "% |";
        if (j_hz) os << " " << num(r.duration / *j_hz, 6) << " |";
        os << "\n";
      }
      return os.str();
  }
  return {};
}

std::string gate_checks(const std::vector<GateCheck>& checks, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ojson a = ojson::array();
      for (const auto& c : checks) {
        ojson j;
        j["label"] = c.label;
        j["target"] = c.target;
        j["duration_invJ"] = c.duration;
        j["fidelity"] = c.fidelity;
        j["infidelity"] = c.infidelity;
        j["max_unitary_deviation"] = c.unitarity_deviation;
        j["subspace_deviation"] = c.subspace_deviation ? ojson(*c.subspace_deviation) : ojson(nullptr);
        j["tolerance"] = c.tolerance;
        j["pass"] = c.pass;
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "label,target,duration_invJ,fidelity,infidelity,max_unitary_deviation,subspace_deviation,tolerance,"
            "result\n";
      for (const auto& c : checks)
        os << c.label << "," << c.target << "," << num(c.duration) << "," << num(c.fidelity, 15) << ","
           << num(c.infidelity, 6) << "," << num(c.unitarity_deviation, 6) << ","
           << (c.subspace_deviation ? num(*c.subspace_deviation, 6) : "") << "," << num(c.tolerance, 6) << ","
           << pass_text(c.pass) << "\n";
      return os.str();
    case Format::md:
      os << "| label | target | duration (1/J) | fidelity | 1 - F | max unitary deviation | subspace deviation "
            "| tol | result |\n";
      os << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : checks)
        os << "| " << c.label << " | " << c.target << " | " << fixed(c.duration, 3) << " | "
           << fixed(c.fidelity, 12) << " | " << num(c.infidelity, 3) << " | " << num(c.unitarity_deviation, 3)
           << " | " << (c.subspace_deviation ? num(*c.subspace_deviation, 3) : "-") << " | "
           << num(c.tolerance, 3) << " | " << pass_text(c.pass) << " |\n";
      return os.str();
  }
  return {};
}

std::string state_checks(const std::vector<StateCheck>& checks, Format format) {
  auto label = [](StateLabel l) { return std::string(1, "ABCD"[static_cast<int>(l)]); };
  auto terms = [](const StateCheck& c) {
    std::string s;
    for (const auto& [op, v] : c.coefficients) {
      if (!s.empty()) s += " ";
      s += op.label() + "=" + num(v, 10);
    }
    return s;
  };
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ojson a = ojson::array();
      for (const auto& c : checks) {
        ojson j;
        j["state"] = label(c.label);
        ojson coeffs = ojson::object();
        for (const auto& [op, v] : c.coefficients) coeffs[op.label()] = v;
        j["coefficients"] = coeffs;
        j["pass"] = c.pass;
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "state,terms,result\n";
      for (const auto& c : checks) os << label(c.label) << "," << terms(c) << "," << pass_text(c.pass) << "\n";
      return os.str();
    case Format::md:
      os << "| state | terms | result |\n|---|---|---|\n";
      for (const auto& c : checks)
        os << "| " << label(c.label) << " | " << terms(c) << " | " << pass_text(c.pass) << " |\n";
      return os.str();
  }
  return {};
}

std::string geodesic(const GeodesicTarget& target, const GeodesicSolution& s, std::optional<double> j_hz) {
  ojson j;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PhiTarget>)
          j["target"] = {{"phi", t.phi}};
        else
          j["target"] = {{"kappa", t.kappa}};
      },
      target);
  j["u"] = s.u;
  j["tauJ"] = s.tau;
  j["theta"] = s.theta;
  j["length"] = s.length;
  j["weak_amplitude_J"] = s.u / 2;
  if (j_hz) j["tau_s"] = s.tau / *j_hz;
  return dump(j);
}

std::string trajectory_csv(std::span<const SphereState> path, double dt) {
  std::ostringstream os;
  os << "t_invJ,x,y,z\n";
  for (std::size_t i = 0; i < path.size(); ++i)
    os << num(dt * static_cast<double>(i)) << "," << num(path[i].x) << "," << num(path[i].y) << ","
       << num(path[i].z) << "\n";
  return os.str();
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "freq_Hz,real,imag\n";
  for (std::size_t k = 0; k < s.value.size(); ++k)
    os << num(s.frequency_hz[k]) << "," << num(s.value[k].real()) << "," << num(s.value[k].imag()) << "\n";
  return os.str();
}

}  // namespace isinggate::report
