/* Copyright 2026 The bikernel Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <vector>

#include "bikernel/bicat.hpp"
#include "bikernel/error.hpp"

namespace bikernel {

// Calls visit on every tuple of the product of `choices`, last position
// fastest. An empty list of positions yields one empty tuple; an empty
// position yields nothing. Each tuple costs one budget step.
template <typename Visit>
void odometer(const std::vector<std::vector<Id>>& choices, Budget& budget, Visit&& visit) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<Id> cur(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) cur[i] = choices[i][0];
  while (true) {
    budget.Spend();
    visit(cur);
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) {
        cur[k] = choices[k][pos[k]];
        break;
      }
      pos[k] = 0;
      cur[k] = choices[k][0];
      if (k == 0) return;
    }
    if (choices.empty()) return;
  }
}

}  // namespace bikernel
