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


#include "harvest/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "harvest/detector_state.hpp"
#include "harvest/error.hpp"

namespace harvest {

namespace {

void check_keys(const toml::table &t, std::string_view name, const std::set<std::string> &known) {
  for (const auto &[key, _] : t) {
    if (!known.count(std::string(key.str()))) {
      throw contract_violation("config: unknown key [" + std::string(name) + "]." +
                               std::string(key.str()));
    }
  }
}

double get_double(const toml::table &t, std::string_view key, double fallback) {
  const auto node = t[key];
  if (!node) return fallback;
  if (auto v = node.value<double>()) return *v;
  throw contract_violation("config: " + std::string(key) + " must be a number");
}

std::vector<std::string> get_strings(const toml::table &t, std::string_view key) {
  std::vector<std::string> out;
  const auto node = t[key];
  if (auto s = node.value<std::string>()) {
    out.push_back(*s);
  } else if (const auto *arr = node.as_array()) {
    for (const auto &el : *arr) {
      auto s2 = el.value<std::string>();
      if (!s2) throw contract_violation("config: " + std::string(key) + " must hold strings");
      out.push_back(*s2);
    }
  } else if (node) {
    throw contract_violation("config: " + std::string(key) + " must be a string or array");
  }
  return out;
}

const toml::table &subtable(const toml::table &root, std::string_view name) {
  static const toml::table empty;
  const auto *t = root[name].as_table();
  return t ? *t : empty;
}

}  // namespace

SweepSpec parse_sweep_config(std::string_view toml_text) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error &e) {
    throw contract_violation(std::string("config: ") + std::string(e.description()));
  }
  check_keys(root, "", {"detector", "sweep", "numerics"});
  const auto &det = subtable(root, "detector");
  const auto &sw = subtable(root, "sweep");
  const auto &num = subtable(root, "numerics");
  check_keys(det, "detector",
             {"lambda", "omega", "rtilde", "dtilde", "dtilde_offset", "dynamics"});
  check_keys(sw, "sweep",
             {"axis", "grid", "start", "stop", "points", "modes", "states", "parametrization"});
  check_keys(num, "numerics",
             {"rel_tol", "max_segments", "lp_tolerance", "cf_zero_threshold", "workers"});

  SweepSpec spec;
  DetectorConfig &f = spec.fixed;
  f.lambda = get_double(det, "lambda", f.lambda);
  f.omega = get_double(det, "omega", f.omega);
  f.rtilde = get_double(det, "rtilde", f.rtilde);
  f.dtilde = get_double(det, "dtilde", f.dtilde);
  if (const auto dyn = get_strings(det, "dynamics"); !dyn.empty()) {
    spec.dynamics.clear();
    for (const auto &d : dyn) spec.dynamics.push_back(parse_dynamics(d));
  }
  f.dynamics = spec.dynamics.front();

  if (auto a = sw["axis"].value<std::string>()) spec.axis = parse_axis(*a);
  if (auto p = sw["parametrization"].value<std::string>()) {
    spec.parametrization = parse_parametrization(*p);
  }
  if (det.contains("dtilde_offset")) {
    if (det.contains("dtilde")) {
      throw contract_violation("config: give either dtilde or dtilde_offset");
    }
    if (spec.axis == Axis::rtilde || spec.axis == Axis::dtilde ||
        spec.parametrization != Parametrization::fixed_RT) {
      throw contract_violation("config: dtilde_offset needs fixed_RT and a fixed rtilde");
    }
    f.dtilde = min_spacelike_distance(f.rtilde) + get_double(det, "dtilde_offset", 0.0);
  }

  if (const auto *grid = sw["grid"].as_array()) {
    for (const auto &el : *grid) {
      auto v = el.value<double>();
      if (!v) throw contract_violation("config: grid must hold numbers");
      spec.grid.push_back(*v);
    }
  } else if (sw.contains("start") || sw.contains("stop") || sw.contains("points")) {
    const double start = get_double(sw, "start", 0.0);
    const double stop = get_double(sw, "stop", 0.0);
    const auto points = sw["points"].value<int64_t>().value_or(0);
    if (points < 1) throw contract_violation("config: points must be positive");
    for (int64_t i = 0; i < points; ++i) {
      spec.grid.push_back(points == 1 ? start
                                      : start + (stop - start) * static_cast<double>(i) /
                                                    static_cast<double>(points - 1));
    }
  } else if (spec.axis == Axis::omega) {
    spec.grid = default_omega_grid();
    spec.default_grid = true;
  }

  if (const auto modes = get_strings(sw, "modes"); !modes.empty()) {
    spec.compute_cf = spec.compute_negativity = false;
    for (const auto &m : modes) {
      if (m == "cf") {
        spec.compute_cf = true;
      } else if (m == "negativity") {
        spec.compute_negativity = true;
      } else {
        throw contract_violation("config: unknown mode " + m);
      }
    }
  }
  if (const auto states = get_strings(sw, "states"); !states.empty()) {
    spec.states.clear();
    for (const auto &s : states) spec.states.push_back(parse_state_variant(s));
  }

  spec.quadrature.rel_tol = get_double(num, "rel_tol", spec.quadrature.rel_tol);
  if (auto m = num["max_segments"].value<int64_t>()) {
    if (*m < 1) throw contract_violation("config: max_segments must be positive");
    spec.quadrature.max_segments = static_cast<std::size_t>(*m);
  }
  spec.cf.simplex.tolerance = get_double(num, "lp_tolerance", spec.cf.simplex.tolerance);
  spec.cf.zero_threshold = get_double(num, "cf_zero_threshold", spec.cf.zero_threshold);
  if (auto w = num["workers"].value<int64_t>()) {
    if (*w < 0) throw contract_violation("config: workers must be nonnegative");
    spec.workers = static_cast<unsigned>(*w);
  }
  spec.validate();
  return spec;
}

SweepSpec load_sweep_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw contract_violation("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

}  // namespace harvest
