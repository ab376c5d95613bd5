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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bikernel {

struct Violation {
  std::string law;
  std::vector<std::string> cells;
  std::string lhs;
  std::string rhs;
};

// Result of a validation or law check. Only the first kMaxStored
// violations are kept verbatim; violation_count is always exact.
struct Report {
  static constexpr std::size_t kMaxStored = 1000;

  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::map<std::string, std::uint64_t> instantiations;

  bool pass() const { return violation_count == 0; }

  void add(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxStored) violations.push_back(std::move(v));
  }

  // Appends another report, prefixing its law tags.
  void absorb(const Report& other, const std::string& prefix = "") {
    for (const Violation& v : other.violations) {
      Violation w = v;
      w.law = prefix + w.law;
      if (violations.size() < kMaxStored) violations.push_back(std::move(w));
    }
    violation_count += other.violation_count;
    for (const auto& [k, n] : other.instantiations) instantiations[prefix + k] += n;
  }

  // Tags of the violated laws, deduplicated and sorted.
  std::vector<std::string> failed_laws() const;
};

}  // namespace bikernel
