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


#ifndef HARVEST_HARNESS_HPP_
#define HARVEST_HARNESS_HPP_

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/contextuality.hpp"
#include "harvest/detector_state.hpp"
#include "harvest/kernels.hpp"
#include "harvest/wigner.hpp"

namespace harvest {

enum class Axis { omega, dtilde, rtilde, lambda };
/// Which joint state the LP is run on: the perturbative state, rho_A (x) rho_B,
/// or rho_A (x) |0><0|.
enum class StateVariant { joint, reduced_tensor_reduced, reduced_tensor_ground };
/// fixed_RT holds rtilde and dtilde in units of T. fixed_ROmega holds R Omega
/// and d Omega, so rtilde = R' / omega and dtilde = d' / omega per point.
enum class Parametrization { fixed_RT, fixed_ROmega };

std::string_view to_string(Axis a);
std::string_view to_string(StateVariant s);
std::string_view to_string(Parametrization p);
Axis parse_axis(std::string_view s);
StateVariant parse_state_variant(std::string_view s);
Parametrization parse_parametrization(std::string_view s);

struct SweepRow;

/// Raised when too many grid points of a sweep fail. Carries every row so
/// callers can still persist the partial result.
class sweep_error : public std::runtime_error {
 public:
  sweep_error(const std::string &what, std::vector<SweepRow> rows);
  const std::vector<SweepRow> &rows() const noexcept;

 private:
  std::shared_ptr<const std::vector<SweepRow>> rows_;
};

struct SweepSpec {
  Axis axis = Axis::omega;
  std::vector<double> grid;
  /// Values for the non-swept fields. Under fixed_ROmega, rtilde and dtilde
  /// hold R Omega and d Omega.
  DetectorConfig fixed;
  std::vector<Dynamics> dynamics{Dynamics::SU2};
  bool compute_cf = true;
  bool compute_negativity = true;
  std::vector<StateVariant> states{StateVariant::joint};
  Parametrization parametrization = Parametrization::fixed_RT;
  QuadratureOptions quadrature{};
  CFOptions cf{};
  /// 0 selects the hardware concurrency, unless HARVEST_WORKERS is set.
  unsigned workers = 0;
  /// Set when the grid came from default_omega_grid rather than the config;
  /// the CSV header then marks it as an artifact choice.
  bool default_grid = false;

  /// Throws contract_violation for an empty or non-increasing grid, invalid
  /// fixed values, or an empty dynamics set.
  void validate() const;
  /// Effective configuration (units of T) of one grid value.
  DetectorConfig point(double value, Dynamics d) const;
};

struct SweepRow {
  std::size_t grid_index = 0;
  double axis_value = 0.0;
  DetectorConfig config;  ///< effective values, units of T
  KernelSet kernels;
  bool spacelike = false;
  /// Contextual fraction per StateVariant; NaN when not requested.
  double cf_joint = std::numeric_limits<double>::quiet_NaN();
  double cf_product = std::numeric_limits<double>::quiet_NaN();
  double cf_ground = std::numeric_limits<double>::quiet_NaN();
  LPStatus lp_status = LPStatus::optimal;
  double negativity = std::numeric_limits<double>::quiet_NaN();
  double mana = std::numeric_limits<double>::quiet_NaN();
  int violated_facets = 0;
  InequalityReport inequalities;
  double clamp_report = 0.0;
  double kernel_seconds = 0.0;
  double lp_seconds = 0.0;
  /// Empty on success; otherwise the failure message for this point.
  std::string error;

  bool ok() const { return error.empty(); }
};

/// Evaluates every (grid value, dynamics) pair; rows are ordered by grid
/// index, then by the order of spec.dynamics. Points run in parallel.
/// A failing point is recorded in its row. Throws sweep_error when more than
/// 10% of the points fail.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

/// Single point of a sweep, exposed for the CLI and tests.
SweepRow evaluate_point(const SweepSpec &spec, std::size_t grid_index, Dynamics d);

/// Number of workers a sweep will use for the given request.
unsigned resolve_workers(unsigned requested);

struct CsvOptions {
  bool timings = false;  ///< timing columns break byte-for-byte determinism
  std::optional<long long> seed;
};

inline constexpr int kCsvSchemaVersion = 1;

/// One row per SweepRow. Complex kernels are split into _re/_im columns.
/// Output depends only on the rows (and options), never on the run.
void write_csv(std::ostream &os, const SweepSpec &spec, const std::vector<SweepRow> &rows,
               const CsvOptions &opts = {});
std::vector<std::string> csv_columns(const CsvOptions &opts = {});

struct ScalingReport {
  std::vector<double> lambdas;
  std::vector<double> cf_over_lambda2;
  double max_relative_deviation = 0.0;
  bool zero_signal = false;
  bool pass = false;
};

/// cf / lambda^2 at each lambda with everything else held fixed. The cf zero
/// threshold is taken as 1e-3 lambda^2 so small couplings are not zeroed.
/// Passes iff the max relative deviation from the mean is at most 1%, or
/// every cf is zero. Throws contract_violation for lambdas outside
/// [1e-4, 1e-2] or an empty list.
ScalingReport scaling_check(const DetectorConfig &fixed, const std::vector<double> &lambdas,
                            const QuadratureOptions &quad = {});

struct DynamicsComparison {
  std::vector<double> axis_values;
  std::vector<double> cf_su2, cf_hw;
  std::vector<double> negativity_su2, negativity_hw;
  /// Fraction of grid points with cf_HW >= cf_SU2.
  double fraction_hw_ge = 0.0;
};

/// Runs the sweep for SU2 and HW side by side. Throws contract_violation
/// unless spec.dynamics contains both.
DynamicsComparison dynamics_comparison(const SweepSpec &spec);

/// omega on [0, 6] in steps of 0.1 (61 points).
std::vector<double> default_omega_grid();

}  // namespace harvest

#endif  // HARVEST_HARNESS_HPP_
