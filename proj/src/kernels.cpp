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

#include "harvest/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "harvest/error.hpp"
#include "harvest/quadrature.hpp"
#include "harvest/special_functions.hpp"

namespace harvest {

std::string_view to_string(Dynamics d) { return d == Dynamics::SU2 ? "SU2" : "HW"; }

Dynamics parse_dynamics(std::string_view s) {
  if (s == "SU2" || s == "su2") return Dynamics::SU2;
  if (s == "HW" || s == "hw") return Dynamics::HW;
  throw contract_violation("unknown dynamics '" + std::string(s) + "' (expected SU2 or HW)");
}

void DetectorConfig::validate() const {
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(lambda) || !finite(omega) || !finite(rtilde) || !finite(dtilde)) {
    throw contract_violation("DetectorConfig: non-finite parameter");
  }
  if (!(lambda > 0.0)) throw contract_violation("DetectorConfig: lambda must be > 0");
  if (!(rtilde > 0.0)) throw contract_violation("DetectorConfig: rtilde must be > 0");
  if (!(dtilde >= 0.0)) throw contract_violation("DetectorConfig: dtilde must be >= 0");
  if (!(omega >= 0.0)) throw contract_violation("DetectorConfig: omega must be >= 0");
}

double kernel_prefactor(const DetectorConfig &cfg) {
  return 9.0 * cfg.lambda * cfg.lambda / (4.0 * std::numbers::pi * cfg.rtilde * cfg.rtilde);
}

namespace {

using cplx = std::complex<double>;

constexpr double kCrossFloor = 1e-3;
constexpr double kPilotTol = 1e-6;
constexpr double kMaxCutoffGrowth = 1e6;

double j1_squared(double u) {
  const double j = spherical_bessel_j1(u);
  return j * j;
}

// |j1(u)| <= min(u/3, 1/u + 1/u^2).
double j1_squared_envelope(double u) {
  const double small = u / 3.0;
  const double large = 1.0 / u + 1.0 / (u * u);
  const double m = std::min(small, large);
  return m * m;
}

template <typename Value>
void require(const QuadratureResult<Value> &r, double scale, double rel_tol, const char *what) {
  if (!r.converged && r.error > rel_tol * scale) {
    throw numeric_failure(std::string("compute_kernels: ") + what +
                              " did not converge within the segment budget",
                          r.error);
  }
}

// Smallest cutoff K0 * 1.25^n whose tail bound falls below target.
template <typename Bound>
double solve_cutoff(Bound &&bound, double k0, double target, const char *what) {
  double k = k0;
  while (bound(k) > target) {
    k *= 1.25;
    if (k > kMaxCutoffGrowth * k0) {
      throw numeric_failure(std::string("compute_kernels: no cutoff meets the ") + what +
                                " tail tolerance",
                            bound(k));
    }
  }
  return k;
}

struct Integral {
  cplx value{};
  double error = 0.0;
};

class KernelIntegrator {
 public:
  KernelIntegrator(const DetectorConfig &cfg, const QuadratureOptions &opts)
      : R_(cfg.rtilde), d_(cfg.dtilde), om_(cfg.omega), opts_(opts) {}

  // int_0^inf j1^2(kR)/k exp(-(k+w)^2/2) [j0(kd)] dk
  Integral gaussian(bool cross, double abs_tol) const {
    const double k_max = std::sqrt(om_ * om_ + 90.0) - om_;
    const double width = std::numbers::pi / (2.0 * R_ + (cross ? d_ : 0.0));
    auto f = [&](double k) {
      double v = j1_squared(k * R_) / k * std::exp(-0.5 * (k + om_) * (k + om_));
      if (cross) v *= spherical_bessel_j0(k * d_);
      return v;
    };
    const auto edges = panel_edges(k_max, width);
    const auto r = integrate_panels<double>(f, edges, abs_tol, opts_.rel_tol, opts_.max_segments);
    const double tail = j1_squared_envelope(k_max * R_) / k_max *
                        std::exp(-0.5 * (k_max + om_) * (k_max + om_)) / (k_max + om_);
    require(r, std::max(std::abs(r.value), abs_tol / opts_.rel_tol), opts_.rel_tol,
            cross ? "L_ab" : "L");
    return {r.value, r.error + tail};
  }

  // int_0^inf j1^2(kR)/k g(k) dk for g = w(-k/sqrt2) (shift 0) or
  // w((w/2 - k)/sqrt2) (shift w/2). The non-oscillating part of the tail is
  // integrated after k -> 1/k; the oscillating remainder is bounded.
  Integral local(double shift) const {
    auto g = [shift](double k) { return faddeeva(cplx((shift - k) / std::numbers::sqrt2, 0.0)); };
    auto f = [&](double k) { return j1_squared(k * R_) / k * g(k); };
    const double width = std::numbers::pi / (2.0 * R_);
    const double k_start = std::max(8.0 / R_, shift + 8.0);

    const auto pilot_edges = panel_edges(k_start, width);
    const auto pilot =
        integrate_panels<cplx>(f, pilot_edges, 0.0, kPilotTol, opts_.max_segments);
    const double scale = std::abs(pilot.value);

    auto bound = [&](double k) {
      const double u = k * R_;
      return (0.5 / (u * u) + 0.5 / (u * u * u * u) + 1.0 / (u * u * u)) * std::abs(g(k)) /
             (k * R_);
    };
    const double k_max = solve_cutoff(bound, k_start, 0.1 * opts_.rel_tol * scale, "local");

    const auto edges = panel_edges(k_max, width);
    const auto head =
        integrate_panels<cplx>(f, edges, 0.0, 0.5 * opts_.rel_tol, opts_.max_segments);
    require(head, scale, opts_.rel_tol, "local kernel");

    // A(u) = 1/(2u^2) + 1/(2u^4) with u = R/t, measure dk/k = dt/t.
    const double R2 = R_ * R_;
    auto mean_tail = [&](double t) {
      return (t / (2.0 * R2) + t * t * t / (2.0 * R2 * R2)) * g(1.0 / t);
    };
    const std::vector<double> tail_edges{0.0, 1.0 / k_max};
    const auto tail = integrate_panels<cplx>(mean_tail, tail_edges, 0.1 * opts_.rel_tol * scale,
                                             0.0, opts_.max_segments);
    return {head.value + tail.value, head.error + tail.error + bound(k_max)};
  }

  // int_0^inf j1^2(kR) j0(kd)/k w(-k/sqrt2) dk, error target relative to
  // max(|value|, floor * local_scale).
  Integral cross_feynman(double local_scale) const {
    auto g = [](double k) { return faddeeva(cplx(-k / std::numbers::sqrt2, 0.0)); };
    auto f = [&](double k) { return j1_squared(k * R_) * spherical_bessel_j0(k * d_) / k * g(k); };
    const double width = std::numbers::pi / (2.0 * R_ + d_);
    const double k_start = std::max({8.0 / R_, 8.0 / d_, 8.0});

    const auto pilot_edges = panel_edges(k_start, width);
    const auto pilot =
        integrate_panels<cplx>(f, pilot_edges, 0.0, kPilotTol, opts_.max_segments);
    const double scale = std::max(std::abs(pilot.value), kCrossFloor * local_scale);

    const double nu = std::min(d_, std::abs(d_ - 2.0 * R_));
    auto bound = [&](double k) {
      const double u = k * R_;
      const double env = (1.0 / (u * u) + 1.0 / (u * u * u)) * std::abs(g(k)) / (k * k * d_);
      const double absolute = env * k / 3.0;
      return nu > 0.0 ? std::min(2.0 * env / nu, absolute) : absolute;
    };
    const double k_max = solve_cutoff(bound, k_start, 0.1 * opts_.rel_tol * scale, "M_ab");
    const auto edges = panel_edges(k_max, width);
    const auto head = integrate_panels<cplx>(f, edges, 0.5 * opts_.rel_tol * scale, 0.0,
                                             opts_.max_segments);
    require(head, scale, opts_.rel_tol, "M_ab");
    return {head.value, head.error + bound(k_max)};
  }

 private:
  double R_;
  double d_;
  double om_;
  QuadratureOptions opts_;
};

}  // namespace

KernelSet compute_kernels(const DetectorConfig &cfg, const QuadratureOptions &opts) {
  cfg.validate();
  const double alpha = kernel_prefactor(cfg);
  const double om = cfg.omega;
  KernelIntegrator integ(cfg, opts);
  KernelSet k;

  const auto l = integ.gaussian(false, 0.0);
  k.L = alpha * l.value.real();
  k.error[0] = alpha * l.error;

  if (cfg.dtilde == 0.0) {
    k.Lab = k.L;
    k.error[1] = k.error[0];
  } else {
    const auto lab = integ.gaussian(true, opts.rel_tol * kCrossFloor * std::abs(l.value.real()));
    k.Lab = alpha * lab.value.real();
    k.error[1] = alpha * lab.error;
  }

  const double feynman = alpha * std::exp(-0.5 * om * om);
  const auto q = integ.local(0.0);
  k.Q = -0.5 * feynman * q.value;
  k.error[2] = 0.5 * feynman * q.error;

  if (cfg.dtilde == 0.0) {
    // j0(0) = 1, so the cross integral is the local one.
    k.Mab = -feynman * q.value;
    k.error[3] = feynman * q.error;
  } else {
    const auto m = integ.cross_feynman(std::abs(q.value));
    k.Mab = -feynman * m.value;
    k.error[3] = feynman * m.error;
  }

  const auto v = integ.local(0.5 * om);
  const double vpre = 0.5 * alpha * std::exp(-om * om / 8.0);
  k.V = vpre * v.value;
  k.error[4] = vpre * v.error;
  return k;
}

}  // namespace harvest
