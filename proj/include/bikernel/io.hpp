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

#include <string>

#include <json.hpp>

#include "bikernel/bicat.hpp"
#include "bikernel/fincat.hpp"
#include "bikernel/report.hpp"

namespace bikernel {

using json = nlohmann::json;

// Presentation documents. Composite keys join tokens with ';'. Unknown
// keys, unknown tokens and duplicate tokens are errors (ParseError,
// DanglingReference, DuplicateId) naming the offending key path.
json to_json(const Bicat& p);
Bicat bicat_from_json(const json& j);

json to_json(const Report& r);
json to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace bikernel
