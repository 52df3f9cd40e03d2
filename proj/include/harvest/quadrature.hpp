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

#ifndef HARVEST_QUADRATURE_HPP_
#define HARVEST_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace harvest {

template <typename Value>
struct QuadratureResult {
  Value value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t segments = 0;
  bool converged = false;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 11> kKronrodNodes{
    0.0,
    1.48874338981631210884826001129719985e-01,
    2.94392862701460198131126603103865566e-01,
    4.33395394129247190799265943165784162e-01,
    5.62757134668604683339000099272694141e-01,
    6.79409568299024406234327365114873576e-01,
    7.80817726586416897063717578345042377e-01,
    8.65063366688984510732096688423493049e-01,
    9.30157491355708226001207180059508346e-01,
    9.73906528517171720077964012084452053e-01,
    9.95657163025808080735527280689002848e-01};
inline constexpr std::array<double, 11> kKronrodWeights{
    1.49445554002916905664936468389821204e-01,
    1.47739104901338491374841515972068046e-01,
    1.42775938577060080797094273138717061e-01,
    1.34709217311473325928054001771706833e-01,
    1.23491976262065851077958109831074160e-01,
    1.09387158802297641899210590325804960e-01,
    9.31254545836976055350654650833663444e-02,
    7.50396748109199527670431409161900094e-02,
    5.47558965743519960313813002445801764e-02,
    3.25581623079647274788189724593897606e-02,
    1.16946388673718742780643960621920484e-02};
// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights{
    2.95524224714752870173892994651338329e-01,
    2.69266719309996355091226921569469353e-01,
    2.19086362515982043995534934228163192e-01,
    1.49451349150580593145776339657697332e-01,
    6.66713443086881375935688098933317929e-02};

template <typename Value>
struct Segment {
  double a = 0.0;
  double b = 0.0;
  Value value{};
  double error = 0.0;

  friend bool operator<(const Segment &x, const Segment &y) { return x.error < y.error; }
};

}  // namespace detail

/// Panel edges on [0, upper]: widths grow like k/2 from 1 but never exceed
/// `max_width`, so oscillations of that half-period are split at their scale.
inline std::vector<double> panel_edges(double upper, double max_width) {
  std::vector<double> edges{0.0};
  double a = 0.0;
  while (a < upper) {
    const double step = std::min(max_width, std::max(1.0, 0.5 * a));
    a = std::min(upper, a + step);
    edges.push_back(a);
  }
  return edges;
}

/// One Gauss-Kronrod 10/21 panel with the QUADPACK error heuristic.
/// The endpoints themselves are never evaluated.
template <typename Value, typename F>
detail::Segment<Value> gauss_kronrod21(F &&f, double a, double b) {
  using detail::kGaussWeights;
  using detail::kKronrodNodes;
  using detail::kKronrodWeights;
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<Value, 21> fx;
  fx[0] = f(centre);
  for (int i = 1; i <= 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    fx[2 * i - 1] = f(centre - dx);
    fx[2 * i] = f(centre + dx);
  }

  Value kronrod = kKronrodWeights[0] * fx[0];
  Value gauss{};
  double resabs = kKronrodWeights[0] * std::abs(fx[0]);
  for (int i = 1; i <= 10; ++i) {
    const Value pair = fx[2 * i - 1] + fx[2 * i];
    kronrod += kKronrodWeights[i] * pair;
    resabs += kKronrodWeights[i] * (std::abs(fx[2 * i - 1]) + std::abs(fx[2 * i]));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const Value mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[0] * std::abs(fx[0] - mean);
  for (int i = 1; i <= 10; ++i) {
    resasc += kKronrodWeights[i] * (std::abs(fx[2 * i - 1] - mean) + std::abs(fx[2 * i] - mean));
  }

  const double h = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  resabs *= h;
  resasc *= h;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, kronrod * half, err};
}

/// Globally adaptive Gauss-Kronrod integration over the panels delimited by
/// `breakpoints` (sorted, at least two). The segment with the largest error
/// estimate is bisected until the summed estimate drops below
/// max(abs_tol, rel_tol * |integral|) or `max_segments` is reached;
/// `converged` reports which.
template <typename Value, typename F>
QuadratureResult<Value> integrate_panels(F &&f, std::span<const double> breakpoints,
                                         double abs_tol, double rel_tol,
                                         std::size_t max_segments) {
  using Seg = detail::Segment<Value>;
  std::priority_queue<Seg> heap;
  QuadratureResult<Value> out;
  double total_err = 0.0;
  Value running{};
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto s = gauss_kronrod21<Value>(f, breakpoints[i], breakpoints[i + 1]);
    total_err += s.error;
    running += s.value;
    heap.push(s);
  }
  out.evaluations = 21 * heap.size();
  std::size_t since_resum = 0;
  const auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(running)); };
  while (total_err > tolerance() && heap.size() < max_segments) {
    const Seg worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    heap.pop();
    auto left = gauss_kronrod21<Value>(f, worst.a, mid);
    auto right = gauss_kronrod21<Value>(f, mid, worst.b);
    out.evaluations += 42;
    total_err += left.error + right.error - worst.error;
    running += left.value + right.value - worst.value;
    heap.push(left);
    heap.push(right);
    if (++since_resum == 256) {
      // Avoid drift in the running error sum.
      since_resum = 0;
      auto copy = heap;
      total_err = 0.0;
      while (!copy.empty()) {
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }

  std::vector<Seg> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  // Sum in left-to-right order so the result does not depend on heap layout.
  std::sort(segs.begin(), segs.end(), [](const Seg &x, const Seg &y) { return x.a < y.a; });
  Value sum{};
  Value carry{};
  double err = 0.0;
  for (const auto &s : segs) {
    const Value y = s.value - carry;
    const Value t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    err += s.error;
  }
  out.value = sum;
  out.error = err;
  out.segments = segs.size();
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(sum));
  return out;
}

}  // namespace harvest

#endif  // HARVEST_QUADRATURE_HPP_
