// Copyright 2026 The qutrit-harvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line driver: single-point evaluations and parameter sweeps.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harvest/config.hpp"
#include "harvest/contextuality.hpp"
#include "harvest/detector_state.hpp"
#include "harvest/error.hpp"
#include "harvest/harness.hpp"
#include "harvest/kernels.hpp"
#include "harvest/serialize.hpp"
#include "harvest/wigner.hpp"

namespace {

using harvest::json;

struct PointArgs {
  harvest::DetectorConfig cfg;
  std::string dynamics = "SU2";

  void attach(CLI::App *app) {
    app->add_option("--lambda", cfg.lambda, "coupling constant")->capture_default_str();
    app->add_option("--omega", cfg.omega, "gap times duration")->capture_default_str();
    app->add_option("--rtilde", cfg.rtilde, "smearing radius / T")->capture_default_str();
    app->add_option("--dtilde", cfg.dtilde, "separation / T")->capture_default_str();
    app->add_option("--dynamics", dynamics, "SU2 or HW")->capture_default_str();
  }

  harvest::DetectorConfig resolve() const {
    harvest::DetectorConfig c = cfg;
    c.dynamics = harvest::parse_dynamics(dynamics);
    c.validate();
    return c;
  }
};

json read_json(const std::string &path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw harvest::contract_violation("cannot open " + path);
  return json::parse(in);
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Contextuality and Wigner negativity harvested by two qutrit detectors"};
  app.require_subcommand(1);
  std::optional<long long> seed;
  app.add_option("--seed", seed, "accepted for provenance; computation is deterministic");

  PointArgs kernel_args;
  auto *kernels_cmd = app.add_subcommand("kernels", "evaluate L, Lab, Q, Mab and V");
  kernel_args.attach(kernels_cmd);

  PointArgs state_args;
  auto *state_cmd = app.add_subcommand("state", "assemble the joint detector state as JSON");
  state_args.attach(state_cmd);

  std::string cf_input = "-";
  auto *cf_cmd = app.add_subcommand("cf", "contextual fraction of a state JSON");
  cf_cmd->add_option("input", cf_input, "state JSON path, - for stdin");

  std::string wigner_input = "-";
  std::string wigner_which = "A";
  auto *wigner_cmd = app.add_subcommand("wigner", "Wigner profile of a reduced state");
  wigner_cmd->add_option("input", wigner_input, "state JSON path, - for stdin");
  wigner_cmd->add_option("--which", wigner_which, "A or B")->capture_default_str();

  std::string sweep_config, sweep_out, sweep_json;
  bool sweep_timings = false;
  unsigned sweep_workers = 0;
  auto *sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep from a TOML config");
  sweep_cmd->add_option("--config", sweep_config, "TOML file")->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");
  sweep_cmd->add_option("--json", sweep_json, "also write rows as JSON");
  sweep_cmd->add_flag("--timings", sweep_timings, "append timing columns (not reproducible)");
  sweep_cmd->add_option("--workers", sweep_workers, "parallel workers (HARVEST_WORKERS wins)");

  PointArgs scaling_args;
  std::vector<double> lambdas{1e-4, 1e-3, 1e-2};
  auto *scaling_cmd = app.add_subcommand("scaling-check", "cf / lambda^2 across couplings");
  scaling_args.attach(scaling_cmd);
  scaling_cmd->add_option("--lambdas", lambdas, "couplings in [1e-4, 1e-2]")
      ->capture_default_str();

  std::string compare_config;
  auto *compare_cmd = app.add_subcommand("compare-dynamics", "SU2 versus HW over a sweep");
  compare_cmd->add_option("--config", compare_config, "TOML file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kernels_cmd) {
      const auto cfg = kernel_args.resolve();
      json out = {{"config", harvest::to_json(cfg)},
                  {"kernels", harvest::to_json(harvest::compute_kernels(cfg))}};
      if (seed) out["seed"] = *seed;
      emit(out);
    } else if (*state_cmd) {
      const auto cfg = state_args.resolve();
      const auto state = harvest::assemble_state(cfg, harvest::compute_kernels(cfg));
      emit(harvest::to_json(state, seed));
    } else if (*cf_cmd) {
      const auto state = harvest::state_from_json(read_json(cf_input));
      const auto e = harvest::empirical_model(state.rho, state.config.lambda);
      json out = harvest::to_json(harvest::contextual_fraction(e), e.clamp_report);
      if (seed) out["seed"] = *seed;
      emit(out);
    } else if (*wigner_cmd) {
      const auto state = harvest::state_from_json(read_json(wigner_input));
      const auto which = wigner_which == "B" ? harvest::Subsystem::B : harvest::Subsystem::A;
      if (wigner_which != "A" && wigner_which != "B") {
        throw harvest::contract_violation("--which must be A or B");
      }
      json out = harvest::to_json(
          harvest::wigner_profile(harvest::reduce(state, which), state.config.lambda));
      if (seed) out["seed"] = *seed;
      emit(out);
    } else if (*sweep_cmd) {
      auto spec = harvest::load_sweep_config(sweep_config);
      if (sweep_workers > 0) spec.workers = sweep_workers;
      std::vector<harvest::SweepRow> rows;
      int status = 0;
      try {
        rows = harvest::run_sweep(spec);
      } catch (const harvest::sweep_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        rows = e.rows();
        status = 2;
      }
      harvest::CsvOptions opts;
      opts.timings = sweep_timings;
      opts.seed = seed;
      if (sweep_out.empty()) {
        harvest::write_csv(std::cout, spec, rows, opts);
      } else {
        std::ofstream out(sweep_out);
        harvest::write_csv(out, spec, rows, opts);
      }
      if (!sweep_json.empty()) {
        json doc = {{"schema_version", harvest::kCsvSchemaVersion}, {"rows", json::array()}};
        if (seed) doc["seed"] = *seed;
        for (const auto &r : rows) doc["rows"].push_back(harvest::to_json(r));
        std::ofstream(sweep_json) << doc.dump(2) << "\n";
      }
      return status;
    } else if (*scaling_cmd) {
      const auto rep = harvest::scaling_check(scaling_args.resolve(), lambdas);
      json out = harvest::to_json(rep);
      if (seed) out["seed"] = *seed;
      emit(out);
      return rep.pass ? 0 : 1;
    } else if (*compare_cmd) {
      auto spec = harvest::load_sweep_config(compare_config);
      spec.dynamics = {harvest::Dynamics::SU2, harvest::Dynamics::HW};
      json out = harvest::to_json(harvest::dynamics_comparison(spec));
      if (seed) out["seed"] = *seed;
      emit(out);
    }
  } catch (const harvest::sweep_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
