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


#include "harvest/contextuality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "harvest/error.hpp"
#include "harvest/gf3.hpp"
#include "harvest/hw_operators.hpp"

namespace harvest {

Eigen::VectorXd EmpiricalModel::stacked() const {
  return Eigen::Map<const Eigen::VectorXd>(table.data(), kContexts * kOutcomes);
}

double clamp_bound(double lambda) {
  const double l2 = lambda * lambda;
  return std::max(100.0 * l2 * l2, 1e-13);
}

EmpiricalModel empirical_model(const ComplexMatrix &rho, double lambda) {
  if (rho.rows() != 9 || rho.cols() != 9) {
    throw contract_violation("empirical_model: expected a 9x9 state");
  }
  const auto &proj = cached_context_projectors();
  const double bound = clamp_bound(lambda);
  EmpiricalModel e;
  for (int c = 0; c < kContexts; ++c) {
    bool clamped = false;
    for (int r = 0; r < kOutcomes; ++r) {
      const std::complex<double> p =
          (proj[c * kOutcomes + r].transpose().cwiseProduct(rho)).sum();
      if (std::abs(p.imag()) > 1e-12) {
        throw numeric_failure("empirical_model: probability has an imaginary part",
                              std::abs(p.imag()));
      }
      double v = p.real();
      if (v < 0.0) {
        if (-v > bound) {
          throw numeric_failure("empirical_model: negative probability beyond the "
                                "perturbative bound",
                                -v);
        }
        e.clamp_report = std::max(e.clamp_report, -v);
        v = 0.0;
        clamped = true;
      }
      e.table(c, r) = v;
    }
    if (clamped) e.table.row(c) /= e.table.row(c).sum();
  }
  return e;
}

EmpiricalModel empirical_model(const DetectorState &state) {
  return empirical_model(state.rho, state.config.lambda);
}

double disturbance(const EmpiricalModel &e) {
  const auto &contexts = enumerate_contexts();
  // Marginal of W(v) per context, keyed by v.
  std::map<int, Eigen::Vector3d> first;
  double worst = 0.0;
  for (int c = 0; c < kContexts; ++c) {
    const auto &ctx = contexts[c];
    for (int m = 1; m < 9; ++m) {
      const auto [a, b] = ctx.coefficients()[m];
      Eigen::Vector3d marginal = Eigen::Vector3d::Zero();
      for (int r = 0; r < kOutcomes; ++r) {
        marginal(OutcomeLabel::from_index(r).value(a, b)) += e.table(c, r);
      }
      const int key = ctx.members()[m].index();
      auto [it, fresh] = first.emplace(key, marginal);
      if (!fresh) worst = std::max(worst, (it->second - marginal).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

const Eigen::MatrixXd &assignment_matrix() {
  static const Eigen::MatrixXd M = [] {
    const auto &contexts = enumerate_contexts();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(kContexts * kOutcomes, kAssignments);
    for (int s = 0; s < kAssignments; ++s) {
      const auto sv = PhasePointVector::from_index(s);
      for (int c = 0; c < kContexts; ++c) {
        const auto &g = contexts[c].generators();
        const OutcomeLabel r{dot(sv, g[0]), dot(sv, g[1])};
        out(c * kOutcomes + r.index(), s) = 1.0;
      }
    }
    return out;
  }();
  return M;
}

CFResult contextual_fraction(const EmpiricalModel &e, const Eigen::MatrixXd &M,
                             const CFOptions &opts) {
  if (M.rows() != kContexts * kOutcomes) {
    throw contract_violation("contextual_fraction: assignment matrix must have 360 rows");
  }
  if ((e.table.array() < 0.0).any()) {
    throw contract_violation("contextual_fraction: negative probability in model");
  }
  const double row_error = (e.table.rowwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_error > 1e-10) {
    throw contract_violation("contextual_fraction: rows do not sum to one");
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(M.cols());
  const auto lp = maximize<double>(ones, M, e.stacked(), opts.simplex);

  CFResult out;
  out.noncontextual_weights = lp.x;
  out.lp_status = lp.status;
  out.objective_gap = lp.duality_gap;
  out.iterations = lp.iterations;
  out.cf_raw = 1.0 - lp.x.sum();
  out.cf = std::clamp(out.cf_raw, 0.0, 1.0);
  if (out.cf < opts.zero_threshold) out.cf = 0.0;
  return out;
}

CFResult contextual_fraction(const EmpiricalModel &e, const CFOptions &opts) {
  return contextual_fraction(e, assignment_matrix(), opts);
}

}  // namespace harvest
