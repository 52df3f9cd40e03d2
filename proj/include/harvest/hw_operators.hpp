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

#ifndef HARVEST_HW_OPERATORS_HPP_
#define HARVEST_HW_OPERATORS_HPP_

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "harvest/error.hpp"
#include "harvest/gf3.hpp"

namespace harvest {

template <typename Scalar = double>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexMatrix = CMatrix<double>;

/// omega^k with omega = exp(2 pi i / 3), written with exact real parts.
template <typename Scalar = double>
std::complex<Scalar> omega_power(int k) {
  const Scalar half_root3 = std::sqrt(Scalar(3)) / Scalar(2);
  switch (mod3(k)) {
    case 0:
      return {Scalar(1), Scalar(0)};
    case 1:
      return {Scalar(-0.5), half_root3};
    default:
      return {Scalar(-0.5), -half_root3};
  }
}

/// Clock operator Z = diag(1, w, w^2).
template <typename Scalar = double>
CMatrix<Scalar> clock() {
  CMatrix<Scalar> z = CMatrix<Scalar>::Zero(3, 3);
  for (int j = 0; j < 3; ++j) z(j, j) = omega_power<Scalar>(j);
  return z;
}

/// Shift operator X |j> = |j + 1 mod 3>.
template <typename Scalar = double>
CMatrix<Scalar> shift() {
  CMatrix<Scalar> x = CMatrix<Scalar>::Zero(3, 3);
  for (int j = 0; j < 3; ++j) x(mod3(j + 1), j) = Scalar(1);
  return x;
}

namespace detail {

// w^{2pq} X^p Z^q written entrywise: column j carries w^{2pq + qj} at row j+p.
template <typename Scalar>
CMatrix<Scalar> weyl_single(int p, int q) {
  CMatrix<Scalar> w = CMatrix<Scalar>::Zero(3, 3);
  for (int j = 0; j < 3; ++j) w(mod3(j + p), j) = omega_power<Scalar>(2 * p * q + q * j);
  return w;
}

template <typename Scalar>
CMatrix<Scalar> kron(const CMatrix<Scalar> &a, const CMatrix<Scalar> &b) {
  CMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

/// Heisenberg-Weyl operator W(v); 3x3 for one qutrit, 9x9 (tensor product of
/// single-qutrit factors) for two.
template <typename Scalar = double>
CMatrix<Scalar> weyl(const PhasePointVector &v) {
  auto w = detail::weyl_single<Scalar>(v[0], v[1]);
  if (v.size() == 2) return w;
  return detail::kron<Scalar>(w, detail::weyl_single<Scalar>(v[2], v[3]));
}

/// Z_3-linear outcome assignment on a context, fixed by its values on the two
/// generators. index() = 3 r1 + r2 is the canonical outcome order.
struct OutcomeLabel {
  int r1 = 0;
  int r2 = 0;

  static OutcomeLabel from_index(int i) { return {i / 3, i % 3}; }
  int index() const noexcept { return 3 * r1 + r2; }
  /// r(a g1 + b g2) = a r1 + b r2.
  int value(int a, int b) const noexcept { return mod3(a * r1 + b * r2); }
  bool valid() const noexcept { return r1 >= 0 && r1 < 3 && r2 >= 0 && r2 < 3; }
};

/// Projector (1/9) sum_{W in C} w^{-r(W)} W onto the joint eigenspace with
/// outcome label r.
template <typename Scalar = double>
CMatrix<Scalar> context_projector(const Context &c, const OutcomeLabel &r) {
  if (!r.valid()) {
    throw contract_violation("context_projector: outcome label out of range");
  }
  CMatrix<Scalar> p = CMatrix<Scalar>::Zero(9, 9);
  for (int m = 0; m < 9; ++m) {
    const auto [a, b] = c.coefficients()[m];
    p += omega_power<Scalar>(-r.value(a, b)) * weyl<Scalar>(c.members()[m]);
  }
  return p / Scalar(9);
}

/// Projector onto the w^r eigenspace of W(v), built as (1/3) sum_k w^{-rk} W(kv).
template <typename Scalar = double>
CMatrix<Scalar> eigenprojector(const PhasePointVector &v, int r) {
  const Eigen::Index n = v.size() == 2 ? 3 : 9;
  CMatrix<Scalar> p = CMatrix<Scalar>::Zero(n, n);
  for (int k = 0; k < 3; ++k) p += omega_power<Scalar>(-r * k) * weyl<Scalar>(k * v);
  return p / Scalar(3);
}

/// Single-qutrit phase point operator for (x, y) in Z_3^2:
/// A = -1 + sum_i Pi_i^{r_i}, r = (x, y, x+y, x+2y) over the eigenbases of
/// W[0,1], W[1,0], W[1,1], W[1,2].
template <typename Scalar = double>
CMatrix<Scalar> phase_point_operator(int x, int y) {
  static const std::array<std::array<int, 2>, 4> lines{{{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
  const std::array<int, 4> r{mod3(x), mod3(y), mod3(x + y), mod3(x + 2 * y)};
  CMatrix<Scalar> a = -CMatrix<Scalar>::Identity(3, 3);
  for (int i = 0; i < 4; ++i) {
    a += eigenprojector<Scalar>(PhasePointVector{lines[i][0], lines[i][1]}, r[i]);
  }
  return a;
}

/// All 40 x 9 context projectors in enumerate_contexts() order, built once.
/// Entry [c * 9 + r] is context_projector(contexts[c], OutcomeLabel::from_index(r)).
const std::vector<ComplexMatrix> &cached_context_projectors();

}  // namespace harvest

#endif  // HARVEST_HW_OPERATORS_HPP_
