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

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bikernel/display.hpp"

namespace bikernel {

using Choices = std::function<std::vector<std::vector<Id>>(Id)>;
using Law = std::function<bool(Id, const std::vector<Id>&, const std::vector<Id>&)>;
using Token = std::function<std::string(const std::vector<Id>&)>;

// A chaotic layer whose objects over x are the tuples of choices(x) and
// whose single 1-cell over u from s to t exists when law(u, s, t) holds.
// Local tokens are token(s) for objects and token(s) + ">" + token(t) for
// 1-cells.
struct LawLayer {
  DispBicat disp;
  std::map<std::pair<Id, std::string>, std::vector<Id>> value;  // (x, local) -> tuple
};

LawLayer law_layer(BicatPtr base, const Choices& choices, const Law& law, const Token& token,
                   Budget& budget);

}  // namespace bikernel
