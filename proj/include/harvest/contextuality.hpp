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


#ifndef HARVEST_CONTEXTUALITY_HPP_
#define HARVEST_CONTEXTUALITY_HPP_

#include <Eigen/Dense>
#include <string>

#include "harvest/detector_state.hpp"
#include "harvest/simplex.hpp"

namespace harvest {

inline constexpr int kContexts = 40;
inline constexpr int kOutcomes = 9;
inline constexpr int kAssignments = 81;

using ProbabilityTable = Eigen::Matrix<double, kContexts, kOutcomes, Eigen::RowMajor>;

/// Outcome statistics of a two-qutrit state over the 40 contexts, rows in
/// enumerate_contexts() order, columns in OutcomeLabel::index() order.
struct EmpiricalModel {
  ProbabilityTable table = ProbabilityTable::Zero();
  /// Largest magnitude of a negative probability that was clamped to zero.
  double clamp_report = 0.0;

  /// Rows stacked into the 360-vector v_E.
  Eigen::VectorXd stacked() const;
};

/// Negative probabilities down to -clamp_bound(lambda) are clamped.
/// 100 lambda^4, floored at 1e-13 to absorb rounding for exact states.
double clamp_bound(double lambda);

/// table[C][r] = Re Tr(Pi_C^r rho). Entries in [-clamp_bound, 0) are zeroed
/// and the row renormalized. Throws numeric_failure if a more negative entry
/// appears (carrying its magnitude) or an imaginary part exceeds 1e-12.
EmpiricalModel empirical_model(const ComplexMatrix &rho, double lambda);
EmpiricalModel empirical_model(const DetectorState &state);

/// Largest discrepancy between the distributions of one Weyl operator's
/// outcome as seen from two contexts that contain it.
double disturbance(const EmpiricalModel &e);

/// 360 x 81 zero/one matrix. Column s is the deterministic model of the
/// functional v -> s.v mod 3, s ranging over Z_3^4 in index order.
const Eigen::MatrixXd &assignment_matrix();

struct CFOptions {
  /// Contextual fractions below this are reported as zero.
  double zero_threshold = 1e-9;
  SimplexOptions simplex{};
};

struct CFResult {
  double cf = 0.0;  ///< thresholded and clamped to [0, 1]
  double cf_raw = 0.0;  ///< 1 - sum(weights) before thresholding
  Eigen::VectorXd noncontextual_weights;
  LPStatus lp_status = LPStatus::optimal;
  double objective_gap = 0.0;
  std::size_t iterations = 0;
};

/// Solves max sum(b) s.t. M b <= v_E, b >= 0, cf = 1 - sum(b).
/// Throws contract_violation for a negative or unnormalized model.
CFResult contextual_fraction(const EmpiricalModel &e, const Eigen::MatrixXd &M,
                             const CFOptions &opts = {});
CFResult contextual_fraction(const EmpiricalModel &e, const CFOptions &opts = {});

}  // namespace harvest

#endif  // HARVEST_CONTEXTUALITY_HPP_
