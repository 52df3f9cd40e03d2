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


#include "harvest/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "harvest/error.hpp"

namespace harvest {

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<E, N> &all, const char *what) {
  for (E e : all) {
    if (to_string(e) == s) return e;
  }
  throw contract_violation(std::string("unknown ") + what + ": " + std::string(s));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ComplexMatrix ground_state() {
  ComplexMatrix g = ComplexMatrix::Zero(3, 3);
  g(0, 0) = 1.0;
  return g;
}

}  // namespace

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::omega:
      return "omega";
    case Axis::dtilde:
      return "dtilde";
    case Axis::rtilde:
      return "rtilde";
    case Axis::lambda:
      return "lambda";
  }
  return "unknown";
}

std::string_view to_string(StateVariant s) {
  switch (s) {
    case StateVariant::joint:
      return "joint";
    case StateVariant::reduced_tensor_reduced:
      return "reduced_tensor_reduced";
    case StateVariant::reduced_tensor_ground:
      return "reduced_tensor_ground";
  }
  return "unknown";
}

std::string_view to_string(Parametrization p) {
  return p == Parametrization::fixed_RT ? "fixed_RT" : "fixed_ROmega";
}

Axis parse_axis(std::string_view s) {
  return parse_enum(s, std::array{Axis::omega, Axis::dtilde, Axis::rtilde, Axis::lambda},
                    "axis");
}

StateVariant parse_state_variant(std::string_view s) {
  return parse_enum(s,
                    std::array{StateVariant::joint, StateVariant::reduced_tensor_reduced,
                               StateVariant::reduced_tensor_ground},
                    "state variant");
}

Parametrization parse_parametrization(std::string_view s) {
  return parse_enum(s, std::array{Parametrization::fixed_RT, Parametrization::fixed_ROmega},
                    "parametrization");
}

sweep_error::sweep_error(const std::string &what, std::vector<SweepRow> rows)
    : std::runtime_error(what),
      rows_(std::make_shared<const std::vector<SweepRow>>(std::move(rows))) {}

const std::vector<SweepRow> &sweep_error::rows() const noexcept { return *rows_; }

std::vector<double> default_omega_grid() {
  std::vector<double> g(61);
  for (int i = 0; i < 61; ++i) g[i] = i / 10.0;
  return g;
}

DetectorConfig SweepSpec::point(double value, Dynamics d) const {
  DetectorConfig c = fixed;
  c.dynamics = d;
  switch (axis) {
    case Axis::omega:
      c.omega = value;
      break;
    case Axis::dtilde:
      c.dtilde = value;
      break;
    case Axis::rtilde:
      c.rtilde = value;
      break;
    case Axis::lambda:
      c.lambda = value;
      break;
  }
  if (parametrization == Parametrization::fixed_ROmega) {
    c.rtilde /= c.omega;
    c.dtilde /= c.omega;
  }
  return c;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw contract_violation("sweep: grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw contract_violation("sweep: non-finite grid value");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw contract_violation("sweep: grid must be strictly increasing");
    }
  }
  if (dynamics.empty()) throw contract_violation("sweep: no dynamics selected");
  if (compute_cf && states.empty()) throw contract_violation("sweep: no state variants");
  if (parametrization == Parametrization::fixed_ROmega) {
    const bool omega_positive =
        axis == Axis::omega ? grid.front() > 0.0 : fixed.omega > 0.0;
    if (!omega_positive) {
      throw contract_violation("sweep: fixed_ROmega needs omega > 0 at every point");
    }
  }
  for (double v : grid) point(v, dynamics.front()).validate();
}

SweepRow evaluate_point(const SweepSpec &spec, std::size_t grid_index, Dynamics d) {
  SweepRow row;
  row.grid_index = grid_index;
  row.axis_value = spec.grid.at(grid_index);
  row.config = spec.point(row.axis_value, d);
  try {
    row.config.validate();
    row.spacelike = spacelike_ok(row.config);
    const double lambda = row.config.lambda;

    auto t0 = std::chrono::steady_clock::now();
    row.kernels = compute_kernels(row.config, spec.quadrature);
    row.kernel_seconds = seconds_since(t0);

    const DetectorState state = assemble_state(row.config, row.kernels);
    const ReducedState rho_a = reduce(state, Subsystem::A);
    row.inequalities = reduced_inequalities(row.kernels, d, lambda);
    if (spec.compute_negativity) {
      const auto w = wigner_profile(rho_a, lambda);
      row.negativity = w.negativity;
      row.mana = w.mana();
      row.violated_facets = static_cast<int>(w.violated_facets.size());
    }
    if (spec.compute_cf) {
      t0 = std::chrono::steady_clock::now();
      for (StateVariant v : spec.states) {
        ComplexMatrix rho;
        switch (v) {
          case StateVariant::joint:
            rho = state.rho;
            break;
          case StateVariant::reduced_tensor_reduced:
            rho = tensor(rho_a.rho, reduce(state, Subsystem::B).rho);
            break;
          case StateVariant::reduced_tensor_ground:
            rho = tensor(rho_a.rho, ground_state());
            break;
        }
        const EmpiricalModel e = empirical_model(rho, lambda);
        const CFResult r = contextual_fraction(e, spec.cf);
        row.clamp_report = std::max(row.clamp_report, e.clamp_report);
        if (r.lp_status != LPStatus::optimal) row.lp_status = r.lp_status;
        switch (v) {
          case StateVariant::joint:
            row.cf_joint = r.cf;
            break;
          case StateVariant::reduced_tensor_reduced:
            row.cf_product = r.cf;
            break;
          case StateVariant::reduced_tensor_ground:
            row.cf_ground = r.cf;
            break;
        }
      }
      row.lp_seconds = seconds_since(t0);
    }
  } catch (const std::exception &e) {
    row.error = e.what();
  }
  return row;
}

unsigned resolve_workers(unsigned requested) {
  if (const char *env = std::getenv("HARVEST_WORKERS")) {
    unsigned n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size() && n > 0) return n;
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
  spec.validate();
  const std::size_t per_point = spec.dynamics.size();
  const std::size_t total = spec.grid.size() * per_point;
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      rows[task] = evaluate_point(spec, task / per_point, spec.dynamics[task % per_point]);
    }
  };
  const unsigned n = std::min<std::size_t>(resolve_workers(spec.workers), total);
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  pool.clear();

  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const SweepRow &r) { return !r.ok(); });
  if (failed * 10 > static_cast<std::ptrdiff_t>(total)) {
    throw sweep_error(std::to_string(failed) + " of " + std::to_string(total) +
                          " sweep points failed",
                      std::move(rows));
  }
  return rows;
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string quote(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> csv_columns(const CsvOptions &opts) {
  std::vector<std::string> cols{
      "grid_index", "axis",         "axis_value",  "dynamics",    "parametrization",
      "lambda",     "omega",        "rtilde",      "dtilde",      "spacelike",
      "L",          "Lab",          "Q_re",        "Q_im",        "Mab_re",
      "Mab_im",     "V_re",         "V_im",        "L_err",       "Lab_err",
      "Q_err",      "Mab_err",      "V_err",       "cf_joint",    "cf_product",
      "cf_ground",  "lp_status",    "negativity",  "mana",        "violated_facets",
      "slack_a",    "slack_b",      "slack_c",     "clamp_report", "status",
      "error"};
  if (opts.timings) {
    cols.push_back("kernel_seconds");
    cols.push_back("lp_seconds");
  }
  return cols;
}

void write_csv(std::ostream &os, const SweepSpec &spec, const std::vector<SweepRow> &rows,
               const CsvOptions &opts) {
  os << "# qutrit-harvest sweep schema v" << kCsvSchemaVersion << "\n";
  os << "# axis=" << to_string(spec.axis) << " points=" << spec.grid.size()
     << " parametrization=" << to_string(spec.parametrization) << "\n";
  if (spec.default_grid) os << "# grid=default omega 0:0.1:6 (artifact choice)\n";
  if (opts.seed) os << "# seed=" << *opts.seed << " (unused; computation is deterministic)\n";
  const auto cols = csv_columns(opts);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const SweepRow &r : rows) {
    const auto &k = r.kernels;
    const auto &c = r.config;
    std::vector<std::string> f{
        std::to_string(r.grid_index),
        std::string(to_string(spec.axis)),
        format_double(r.axis_value),
        std::string(to_string(c.dynamics)),
        std::string(to_string(spec.parametrization)),
        format_double(c.lambda),
        format_double(c.omega),
        format_double(c.rtilde),
        format_double(c.dtilde),
        r.spacelike ? "1" : "0",
        format_double(k.L),
        format_double(k.Lab),
        format_double(k.Q.real()),
        format_double(k.Q.imag()),
        format_double(k.Mab.real()),
        format_double(k.Mab.imag()),
        format_double(k.V.real()),
        format_double(k.V.imag())};
    for (double e : k.error) f.push_back(format_double(e));
    f.push_back(format_double(r.cf_joint));
    f.push_back(format_double(r.cf_product));
    f.push_back(format_double(r.cf_ground));
    f.push_back(std::string(to_string(r.lp_status)));
    f.push_back(format_double(r.negativity));
    f.push_back(format_double(r.mana));
    f.push_back(std::to_string(r.violated_facets));
    for (double s : r.inequalities.slack) f.push_back(format_double(s));
    f.push_back(format_double(r.clamp_report));
    f.push_back(r.ok() ? "ok" : "failed");
    f.push_back(quote(r.error));
    if (opts.timings) {
      f.push_back(format_double(r.kernel_seconds));
      f.push_back(format_double(r.lp_seconds));
    }
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "\n";
  }
}

ScalingReport scaling_check(const DetectorConfig &fixed, const std::vector<double> &lambdas,
                            const QuadratureOptions &quad) {
  if (lambdas.empty()) throw contract_violation("scaling_check: no lambdas");
  for (double l : lambdas) {
    if (!(l >= 1e-4 && l <= 1e-2)) {
      throw contract_violation("scaling_check: lambda outside [1e-4, 1e-2]");
    }
  }
  ScalingReport rep;
  rep.lambdas = lambdas;
  for (double l : lambdas) {
    DetectorConfig cfg = fixed;
    cfg.lambda = l;
    const auto state = assemble_state(cfg, compute_kernels(cfg, quad));
    CFOptions opts;
    opts.zero_threshold = 1e-3 * l * l;
    const auto r = contextual_fraction(empirical_model(state), opts);
    rep.cf_over_lambda2.push_back(r.cf / (l * l));
  }
  const auto &v = rep.cf_over_lambda2;
  const auto zeros = std::count(v.begin(), v.end(), 0.0);
  if (zeros == static_cast<std::ptrdiff_t>(v.size())) {
    rep.zero_signal = true;
    rep.pass = true;
    return rep;
  }
  if (zeros > 0) {
    rep.max_relative_deviation = std::numeric_limits<double>::infinity();
    return rep;
  }
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double x : v) {
    rep.max_relative_deviation = std::max(rep.max_relative_deviation, std::abs(x - mean) / mean);
  }
  rep.pass = rep.max_relative_deviation <= 0.01;
  return rep;
}

DynamicsComparison dynamics_comparison(const SweepSpec &spec) {
  const auto has = [&](Dynamics d) {
    return std::find(spec.dynamics.begin(), spec.dynamics.end(), d) != spec.dynamics.end();
  };
  if (!has(Dynamics::SU2) || !has(Dynamics::HW)) {
    throw contract_violation("dynamics_comparison: spec must include SU2 and HW");
  }
  SweepSpec s = spec;
  s.dynamics = {Dynamics::SU2, Dynamics::HW};
  s.states = {StateVariant::joint};
  const auto rows = run_sweep(s);
  DynamicsComparison out;
  std::size_t hw_ge = 0, counted = 0;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const SweepRow &su2 = rows[2 * i];
    const SweepRow &hw = rows[2 * i + 1];
    out.axis_values.push_back(s.grid[i]);
    out.cf_su2.push_back(su2.cf_joint);
    out.cf_hw.push_back(hw.cf_joint);
    out.negativity_su2.push_back(su2.negativity);
    out.negativity_hw.push_back(hw.negativity);
    if (su2.ok() && hw.ok()) {
      ++counted;
      if (hw.cf_joint >= su2.cf_joint) ++hw_ge;
    }
  }
  out.fraction_hw_ge = counted ? static_cast<double>(hw_ge) / counted : 0.0;
  return out;
}

}  // namespace harvest
