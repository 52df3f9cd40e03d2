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


#ifndef HARVEST_SIMPLEX_HPP_
#define HARVEST_SIMPLEX_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <string_view>

namespace harvest {

enum class LPStatus { optimal, infeasible, numeric_warning };

std::string_view to_string(LPStatus s);

template <typename Scalar>
struct LPResult {
  LPStatus status = LPStatus::optimal;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;     ///< primal solution
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dual;  ///< one multiplier per row
  Scalar objective = Scalar(0);
  /// |b.y - c.x| at the final basis; zero up to rounding when optimal.
  Scalar duality_gap = Scalar(0);
  /// Largest violation of A x <= b, x >= 0, A^T y >= c or y >= 0.
  Scalar max_infeasibility = Scalar(0);
  std::size_t iterations = 0;
};

struct SimplexOptions {
  /// Reduced costs below this count as non-improving.
  double tolerance = 1e-9;
  /// Pivot elements at or below this are skipped in the ratio test.
  double pivot_tolerance = 1e-7;
  /// Basic variables below this are set to exactly zero during pivoting.
  double rhs_tolerance = 1e-15;
  std::size_t max_iterations = 200000;
  /// Pivots between rebuilds of the tableau from the original data.
  std::size_t reinversion_interval = 256;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t degenerate_limit = 50;
};

/// Maximizes c.x subject to A x <= b and x >= 0, with b >= 0 so the slack
/// basis is feasible. Dense tableau simplex with Dantzig pricing and a
/// Bland's-rule fallback on runs of degenerate pivots. No step depends on
/// anything but the data, so the result is deterministic. The final basis is
/// re-solved with a full-pivoting LU to strip accumulated tableau rounding.
/// Throws contract_violation on shape mismatch or negative b, and
/// numeric_failure if the iteration budget runs out or the LP is unbounded.
template <typename Scalar>
LPResult<Scalar> maximize(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &c,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &A,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &b,
                          const SimplexOptions &opts = {});

}  // namespace harvest

#endif  // HARVEST_SIMPLEX_HPP_
