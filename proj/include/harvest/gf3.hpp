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

#ifndef HARVEST_GF3_HPP_
#define HARVEST_GF3_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace harvest {

/// Reduce any integer into {0, 1, 2}.
constexpr int mod3(int x) noexcept { return ((x % 3) + 3) % 3; }

/// Element of Z_3^{2n} (n = 1 or 2) labelling a Heisenberg-Weyl operator.
/// Coordinates are ordered [p1, q1] or [p1, q1, p2, q2].
class PhasePointVector {
 public:
  PhasePointVector() = default;

  /// Throws contract_violation unless coords has length 2 or 4.
  /// Entries are reduced mod 3.
  explicit PhasePointVector(std::span<const int> coords);
  PhasePointVector(std::initializer_list<int> coords);

  /// Vector whose base-3 digits (most significant first) are `index`.
  static PhasePointVector from_index(int index, int length = 4);
  /// Inverse of from_index.
  int index() const noexcept;

  int size() const noexcept { return size_; }
  int qutrits() const noexcept { return size_ / 2; }
  int operator[](int i) const noexcept { return coords_[i]; }
  bool is_zero() const noexcept;

  friend PhasePointVector operator+(const PhasePointVector &a,
                                    const PhasePointVector &b);
  friend PhasePointVector operator*(int s, const PhasePointVector &v);

  friend bool operator==(const PhasePointVector &,
                         const PhasePointVector &) = default;
  friend std::strong_ordering operator<=>(const PhasePointVector &,
                                          const PhasePointVector &) = default;

  std::string str() const;

 private:
  std::uint8_t size_ = 4;
  std::array<std::uint8_t, 4> coords_{};
};

/// Symplectic form p1 q1' - q1 p1' (+ p2 q2' - q2 p2') mod 3.
/// Throws contract_violation on a length mismatch.
int symplectic_form(const PhasePointVector &v, const PhasePointVector &w);

/// Standard dot product mod 3.
int dot(const PhasePointVector &v, const PhasePointVector &w);

/// True iff the symplectic form vanishes on every pair.
bool is_isotropic(std::span<const PhasePointVector> members);

/// A Lagrangian subspace of Z_3^4: one joint measurement of nine commuting
/// Weyl operators (the identity included).
class Context {
 public:
  /// Builds the span of two vectors. Throws contract_violation unless they
  /// are linearly independent, of length 4, and symplectically orthogonal.
  Context(const PhasePointVector &a, const PhasePointVector &b);

  /// Row-reduced echelon basis of the subspace.
  const std::array<PhasePointVector, 2> &generators() const noexcept {
    return generators_;
  }
  /// All nine members in lexicographic order; members()[0] is zero.
  const std::array<PhasePointVector, 9> &members() const noexcept {
    return members_;
  }
  /// Coordinates (a, b) with members()[i] = a g1 + b g2.
  const std::array<std::array<int, 2>, 9> &coefficients() const noexcept {
    return coefficients_;
  }

  bool contains(const PhasePointVector &v) const noexcept;
  /// Position of v in members(), or -1.
  int find(const PhasePointVector &v) const noexcept;

  friend bool operator==(const Context &a, const Context &b) {
    return a.members_ == b.members_;
  }
  friend auto operator<=>(const Context &a, const Context &b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::array<PhasePointVector, 2> generators_;
  std::array<PhasePointVector, 9> members_;
  std::array<std::array<int, 2>, 9> coefficients_{};
};

/// The 40 Lagrangian subspaces of (Z_3^4, symplectic_form), sorted by their
/// member lists. The result is built once and shared.
const std::vector<Context> &enumerate_contexts();

}  // namespace harvest

#endif  // HARVEST_GF3_HPP_
