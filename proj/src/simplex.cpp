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


#include "harvest/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "harvest/error.hpp"

namespace harvest {

std::string_view to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::numeric_warning:
      return "numeric_warning";
  }
  return "unknown";
}

template <typename Scalar>
LPResult<Scalar> maximize(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &c,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &A,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &b,
                          const SimplexOptions &opts) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (c.size() != n || b.size() != m) {
    throw contract_violation("maximize: shape mismatch");
  }
  if ((b.array() < Scalar(0)).any()) {
    throw contract_violation("maximize: right-hand side must be nonnegative");
  }
  const Scalar tol = Scalar(opts.tolerance);

  // Tableau [A I | b] with the reduced-cost row kept separately.
  Mat t(m, n + m + 1);
  t.leftCols(n) = A;
  t.middleCols(n, m).setIdentity();
  t.col(n + m) = b;
  Vec cost = Vec::Zero(n + m);
  cost.head(n) = c;
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  Mat full(m, n + m);
  full.leftCols(n) = A;
  full.rightCols(m).setIdentity();
  Vec c_full = Vec::Zero(n + m);
  c_full.head(n) = c;

  // Rebuilds the tableau and reduced costs from the original data for the
  // current basis, discarding the rounding accumulated by row operations.
  auto reinvert = [&] {
    Mat B(m, m);
    Vec cb(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      B.col(i) = full.col(basis[i]);
      cb(i) = c_full(basis[i]);
    }
    Eigen::PartialPivLU<Mat> lu(B);
    t.leftCols(n + m) = lu.solve(full);
    t.col(n + m) = lu.solve(b);
    const Vec y = lu.transpose().solve(cb);
    cost = c_full - full.transpose() * y;
    for (Eigen::Index i = 0; i < m; ++i) {
      t.col(basis[i]).setZero();
      t(i, basis[i]) = Scalar(1);
      cost(basis[i]) = Scalar(0);
    }
  };

  LPResult<Scalar> out;
  const Scalar pivot_tol = Scalar(opts.pivot_tolerance);
  const Scalar rhs_tol = Scalar(opts.rhs_tolerance);
  std::size_t degenerate_run = 0;
  for (;;) {
    if (out.iterations > 0 && out.iterations % opts.reinversion_interval == 0) reinvert();
    // Dantzig pricing; after a run of degenerate pivots switch to Bland's
    // first-improving-column rule until the objective moves again.
    const bool bland = degenerate_run >= opts.degenerate_limit;
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (cost(j) <= tol) continue;
      if (enter < 0 || (!bland && cost(j) > cost(enter))) enter = j;
      if (bland) break;
    }
    if (enter < 0) break;
    if (out.iterations++ >= opts.max_iterations) {
      throw numeric_failure("maximize: iteration budget exhausted",
                            static_cast<double>(out.iterations));
    }
    // Ratio test. Among tied rows Bland takes the smallest basic index;
    // otherwise the largest pivot element wins.
    Eigen::Index leave = -1;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      // Rounding-level right-hand sides are exact degeneracies.
      if (t(i, n + m) < rhs_tol) t(i, n + m) = Scalar(0);
      const Scalar a = t(i, enter);
      if (a <= pivot_tol) continue;
      const Scalar ratio = t(i, n + m) / a;
      bool take = ratio < best;
      if (!take && ratio == best) {
        take = bland ? basis[i] < basis[leave] : a > t(leave, enter);
      }
      if (take) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw numeric_failure("maximize: objective is unbounded", 0.0);
    degenerate_run = best > Scalar(0) ? 0 : degenerate_run + 1;

    const Scalar pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Scalar f = t(i, enter);
      if (f != Scalar(0)) t.row(i) -= f * t.row(leave);
    }
    const Scalar f = cost(enter);
    cost -= f * t.row(leave).head(n + m).transpose();
    cost(enter) = Scalar(0);
    basis[leave] = enter;
  }

  // Re-solve the optimal basis from the original data.
  Mat B(m, m);
  Vec cb(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    B.col(i) = full.col(basis[i]);
    cb(i) = basis[i] < n ? c(basis[i]) : Scalar(0);
  }
  Eigen::FullPivLU<Mat> lu(B);
  const Vec xb = lu.solve(b);
  const Vec y = lu.transpose().solve(cb);

  Vec x = Vec::Zero(n + m);
  for (Eigen::Index i = 0; i < m; ++i) x(basis[i]) = xb(i);

  Scalar infeas = std::max(Scalar(0), -x.minCoeff());
  infeas = std::max(infeas, ((A * x.head(n) - b).maxCoeff()));
  infeas = std::max(infeas, -y.minCoeff());
  infeas = std::max(infeas, (c - A.transpose() * y).maxCoeff());
  out.x = x.head(n).cwiseMax(Scalar(0));
  out.dual = y;
  out.objective = c.dot(out.x);
  out.duality_gap = std::abs(b.dot(y) - out.objective);
  out.max_infeasibility = infeas;
  out.status = infeas > tol ? LPStatus::numeric_warning : LPStatus::optimal;
  return out;
}

template LPResult<double> maximize<double>(const Eigen::VectorXd &, const Eigen::MatrixXd &,
                                           const Eigen::VectorXd &, const SimplexOptions &);
template LPResult<long double> maximize<long double>(
    const Eigen::Matrix<long double, Eigen::Dynamic, 1> &,
    const Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> &,
    const Eigen::Matrix<long double, Eigen::Dynamic, 1> &, const SimplexOptions &);

}  // namespace harvest
