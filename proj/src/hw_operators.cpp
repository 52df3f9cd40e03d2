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

#include "harvest/hw_operators.hpp"

namespace harvest {

const std::vector<ComplexMatrix> &cached_context_projectors() {
  static const std::vector<ComplexMatrix> projectors = [] {
    std::vector<ComplexMatrix> out;
    const auto &contexts = enumerate_contexts();
    out.reserve(contexts.size() * 9);
    for (const auto &c : contexts) {
      for (int r = 0; r < 9; ++r) {
        out.push_back(context_projector(c, OutcomeLabel::from_index(r)));
      }
    }
    return out;
  }();
  return projectors;
}

}  // namespace harvest
