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

#include "harvest/gf3.hpp"

#include <algorithm>
#include <set>

#include "harvest/error.hpp"

namespace harvest {

PhasePointVector::PhasePointVector(std::span<const int> coords) {
  if (coords.size() != 2 && coords.size() != 4) {
    throw contract_violation("PhasePointVector: length must be 2 or 4, got " +
                             std::to_string(coords.size()));
  }
  size_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords_[i] = static_cast<std::uint8_t>(mod3(coords[i]));
  }
}

PhasePointVector::PhasePointVector(std::initializer_list<int> coords)
    : PhasePointVector(std::span<const int>(coords.begin(), coords.size())) {}

PhasePointVector PhasePointVector::from_index(int index, int length) {
  std::array<int, 4> c{};
  for (int i = length - 1; i >= 0; --i) {
    c[i] = index % 3;
    index /= 3;
  }
  return PhasePointVector(std::span<const int>(c.data(), length));
}

int PhasePointVector::index() const noexcept {
  int idx = 0;
  for (int i = 0; i < size_; ++i) idx = 3 * idx + coords_[i];
  return idx;
}

bool PhasePointVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + size_,
                     [](auto c) { return c == 0; });
}

PhasePointVector operator+(const PhasePointVector &a, const PhasePointVector &b) {
  if (a.size_ != b.size_) {
    throw contract_violation("PhasePointVector: length mismatch in sum");
  }
  PhasePointVector out = a;
  for (int i = 0; i < a.size_; ++i) {
    out.coords_[i] = static_cast<std::uint8_t>((a.coords_[i] + b.coords_[i]) % 3);
  }
  return out;
}

PhasePointVector operator*(int s, const PhasePointVector &v) {
  PhasePointVector out = v;
  s = mod3(s);
  for (int i = 0; i < v.size_; ++i) {
    out.coords_[i] = static_cast<std::uint8_t>((s * v.coords_[i]) % 3);
  }
  return out;
}

std::string PhasePointVector::str() const {
  std::string s = "[";
  for (int i = 0; i < size_; ++i) {
    if (i) s += ",";
    s += static_cast<char>('0' + coords_[i]);
  }
  return s + "]";
}

int symplectic_form(const PhasePointVector &v, const PhasePointVector &w) {
  if (v.size() != w.size()) {
    throw contract_violation("symplectic_form: length mismatch (" +
                             std::to_string(v.size()) + " vs " +
                             std::to_string(w.size()) + ")");
  }
  int acc = 0;
  for (int i = 0; i < v.size(); i += 2) {
    acc += v[i] * w[i + 1] - v[i + 1] * w[i];
  }
  return mod3(acc);
}

int dot(const PhasePointVector &v, const PhasePointVector &w) {
  if (v.size() != w.size()) {
    throw contract_violation("dot: length mismatch");
  }
  int acc = 0;
  for (int i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return mod3(acc);
}

bool is_isotropic(std::span<const PhasePointVector> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (symplectic_form(members[i], members[j]) != 0) return false;
    }
  }
  return true;
}

namespace {

// Row-reduced echelon basis of span{a, b} over Z_3. Assumes independence.
std::array<PhasePointVector, 2> rref(PhasePointVector a, PhasePointVector b) {
  std::array<PhasePointVector, 2> rows{a, b};
  int r = 0;
  for (int col = 0; col < 4 && r < 2; ++col) {
    int pivot = -1;
    for (int i = r; i < 2; ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    // Inverse of 1 is 1 and of 2 is 2 in Z_3.
    rows[r] = rows[r][col] * rows[r];
    for (int i = 0; i < 2; ++i) {
      if (i != r && rows[i][col] != 0) {
        rows[i] = rows[i] + (3 - rows[i][col]) * rows[r];
      }
    }
    ++r;
  }
  return rows;
}

}  // namespace

Context::Context(const PhasePointVector &a, const PhasePointVector &b) {
  if (a.size() != 4 || b.size() != 4) {
    throw contract_violation("Context: generators must be two-qutrit vectors");
  }
  if (symplectic_form(a, b) != 0) {
    throw contract_violation("Context: generators " + a.str() + ", " + b.str() +
                             " do not commute");
  }
  std::set<PhasePointVector> span;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) span.insert(i * a + j * b);
  if (span.size() != 9) {
    throw contract_violation("Context: generators are linearly dependent");
  }
  generators_ = rref(a, b);
  std::copy(span.begin(), span.end(), members_.begin());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto v = i * generators_[0] + j * generators_[1];
      coefficients_[find(v)] = {i, j};
    }
  }
}

bool Context::contains(const PhasePointVector &v) const noexcept {
  return find(v) >= 0;
}

int Context::find(const PhasePointVector &v) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return -1;
  return static_cast<int>(it - members_.begin());
}

namespace {

std::vector<Context> build_contexts() {
  std::set<Context> found;
  for (int i = 1; i < 81; ++i) {
    const auto a = PhasePointVector::from_index(i);
    for (int j = i + 1; j < 81; ++j) {
      const auto b = PhasePointVector::from_index(j);
      if (symplectic_form(a, b) != 0) continue;
      // Skip scalar multiples.
      if (b == 2 * a) continue;
      found.emplace(a, b);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

const std::vector<Context> &enumerate_contexts() {
  static const std::vector<Context> contexts = build_contexts();
  return contexts;
}

}  // namespace harvest
