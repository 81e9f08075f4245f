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

#include "isinggate/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "isinggate/geodesic.hpp"
#include "isinggate/nmr.hpp"
#include "isinggate/report.hpp"
#include "isinggate/sequence_json.hpp"
#include "isinggate/sequences.hpp"

namespace isinggate::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double j_hz = 1.0;
  bool j_set = false;
  double tol = kDefaultEquivalenceTol;
  bool tol_set = false;
  std::string out_path;
  std::string format;
};

class Output {
 public:
  Output(const Globals& g, std::ostream& out) : path_(g.out_path), out_(out) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path_);
    f << text;
    if (!f) throw UsageError("cannot write output file: " + path_);
  }

 private:
  std::string path_;
  std::ostream& out_;
};

report::Format pick_format(const Globals& g, report::Format fallback, std::initializer_list<report::Format> allowed) {
  if (g.format.empty()) return fallback;
  const report::Format f = report::format_from_string(g.format);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError("format '" + g.format + "' is not supported by this command");
  return f;
}

std::optional<double> seconds_scale(const Globals& g) {
  if (!g.j_set) return std::nullopt;
  return g.j_hz;
}

SpectrumConfig load_config(const std::string& path, SpectrumConfig cfg) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed config file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto get = [&](const char* key, double& target) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw UsageError(std::string("config field '") + key + "' must be a number");
    target = j[key].get<double>();
  };
  get("j12", cfg.topology.j12);
  get("j23", cfg.topology.j23);
  get("j13", cfg.topology.j13);
  get("nu1", cfg.topology.nu1);
  get("nu2", cfg.topology.nu2);
  get("nu3", cfg.topology.nu3);
  get("lb", cfg.line_broadening_hz);
  get("acq", cfg.acquisition_s);
  if (j.contains("points")) {
    if (!j["points"].is_number_unsigned()) throw UsageError("config field 'points' must be a positive integer");
    cfg.points = j["points"].get<std::size_t>();
  }
  if (j.contains("detect")) {
    if (!j["detect"].is_array()) throw UsageError("config field 'detect' must be an array");
    cfg.detect.clear();
    for (const auto& q : j["detect"]) {
      if (!q.is_number_integer()) throw UsageError("config field 'detect' must hold qubit indices");
      cfg.detect.insert(q.get<int>());
    }
  }
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gate synthesis, simulation and verification for a three-qubit Ising chain", "isinggate"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* j_opt = app.add_option("--J", g.j_hz, "Coupling J in Hz used to print durations in seconds")
                    ->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", g.tol, "Infidelity tolerance for verification")
                      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "Constant-control time-optimal transfer");
  double phi = 0.0, kappa = 0.0;
  std::string trajectory_path;
  std::size_t samples = 2000;
  auto* phi_opt = geo->add_option("--phi", phi, "Target (0, cos phi, sin phi)");
  auto* kappa_opt = geo->add_option("--kappa", kappa, "Target (cos(pi kappa/2), 0, sin(pi kappa/2))");
  phi_opt->excludes(kappa_opt);
  geo->add_option("--trajectory", trajectory_path, "Write the (x, y, z) path as CSV");
  geo->add_option("--samples", samples, "Trajectory intervals")->check(CLI::PositiveNumber);

  // gates
  auto* gates = app.add_subcommand("gates", "Duration ledger and gate verification");
  gates->require_subcommand(1);
  auto* table = gates->add_subcommand("table", "Implementation durations");
  auto* verify = gates->add_subcommand("verify", "Compile a realization and compare with its target");
  std::string verify_label;
  int verify_m = 2;
  verify->add_option("label", verify_label, "Realization label or 'all'")->required();
  verify->add_option("--m", verify_m, "Repetition count for BB_* labels")->check(CLI::PositiveNumber);

  // sequence
  auto* sequence = app.add_subcommand("sequence", "Pulse sequences");
  sequence->require_subcommand(1);
  auto* emit = sequence->add_subcommand("emit", "Write a pulse sequence as JSON");
  std::string emit_label;
  int emit_m = 2;
  emit->add_option("label", emit_label, "Pulse-level realization label")->required();
  emit->add_option("--m", emit_m, "Repetition count for BB_* labels")->check(CLI::PositiveNumber);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Simulated 1-D spectrum of a transferred state");
  std::string state = "A", params = "acetamide", config_path;
  SpectrumConfig cfg;
  std::vector<int> detect;
  spectrum->add_option("--state", state, "State A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}));
  spectrum->add_option("--params", params, "Parameter preset")->check(CLI::IsMember({"acetamide", "ideal"}));
  spectrum->add_option("--config", config_path, "JSON file overriding preset fields");
  auto* lb_opt = spectrum->add_option("--lb", cfg.line_broadening_hz, "Line broadening in Hz");
  auto* acq_opt = spectrum->add_option("--acq", cfg.acquisition_s, "Acquisition time in s");
  auto* points_opt = spectrum->add_option("--points", cfg.points, "Number of points");
  auto* detect_opt = spectrum->add_option("--detect", detect, "Detected qubits");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  g.j_set = j_opt->count() > 0;
  g.tol_set = tol_opt->count() > 0;

  Output output(g, out);
  try {
    if (*geo) {
      pick_format(g, report::Format::json, {report::Format::json});
      if (phi_opt->count() + kappa_opt->count() != 1) throw UsageError("geodesic needs --phi or --kappa");
      GeodesicTarget target = phi_opt->count() ? GeodesicTarget{PhiTarget{phi}} : GeodesicTarget{KappaTarget{kappa}};
      const GeodesicSolution s = search_constant_u(target);
      output.write(report::geodesic(target, s, seconds_scale(g)));
      if (!trajectory_path.empty()) {
        const auto path = sample_sphere_path(s.u, s.tau, samples);
        std::ofstream f(trajectory_path, std::ios::binary);
        f << report::trajectory_csv(path, s.tau / static_cast<double>(samples));
        if (!f) throw UsageError("cannot write trajectory file: " + trajectory_path);
      }
      return kOk;
    }
    if (*table) {
      const auto f = pick_format(g, report::Format::md, {report::Format::md, report::Format::csv, report::Format::json});
      output.write(report::duration_table(duration_table(), f, seconds_scale(g)));
      return kOk;
    }
    if (*verify) {
      const auto f = pick_format(g, report::Format::md, {report::Format::md, report::Format::csv, report::Format::json});
      std::vector<std::string> labels;
      if (verify_label == "all")
        labels = {"C1", "C2", "C3", "C4", "C5", "T5", "T6", "SQRT13", "U13", "U13G"};
      else
        labels = {verify_label};
      std::vector<GateCheck> checks;
      bool pass = true;
      for (const auto& label : labels) {
        const Realization r = realization(label, verify_m);
        double tol = g.tol;
        if (!g.tol_set && label.rfind("BB_", 0) == 0) {
          const std::string base = label.substr(0, label.find('('));
          tol = broadband_zero_offset_bound(base == "BB_U13"      ? BroadbandGate::U13
                                            : base == "BB_SQRT13" ? BroadbandGate::SQRT_U13
                                                                  : BroadbandGate::TOFFOLI);
        }
        checks.push_back(verify_realization(r, tol));
        pass = pass && checks.back().pass;
      }
      output.write(report::gate_checks(checks, f));
      return pass ? kOk : kFail;
    }
    if (*emit) {
      pick_format(g, report::Format::json, {report::Format::json});
      const Realization r = realization(emit_label, emit_m);
      if (!r.pulse_level())
        throw UsageError(emit_label + " is defined as a propagator factorization and has no pulse sequence");
      output.write(to_json(r.sequence()));
      return kOk;
    }
    if (*spectrum) {
      pick_format(g, report::Format::csv, {report::Format::csv});
      SpectrumConfig base;
      base.topology = spectrum_preset(params);
      if (!config_path.empty()) base = load_config(config_path, base);
      if (lb_opt->count()) base.line_broadening_hz = cfg.line_broadening_hz;
      if (acq_opt->count()) base.acquisition_s = cfg.acquisition_s;
      if (points_opt->count()) base.points = cfg.points;
      if (detect_opt->count()) base.detect = std::set<int>(detect.begin(), detect.end());
      const DensityOperator rho = prepared_state(state_label_from_string(state));
      output.write(report::spectrum_csv(simulate_spectrum(rho, base)));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchError& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  err << app.help();
  return kUsage;
}

}  // namespace isinggate::cli
