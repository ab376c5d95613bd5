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
#include "bikernel/error.hpp"

#include <cstdlib>

namespace bikernel {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kEnumerationBudgetExceeded:
      return "EnumerationBudgetExceeded";
    case ErrorCode::kNotStrict: return "NotStrict";
    case ErrorCode::kInvalidMonoid: return "InvalidMonoid";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kChaoticClosureViolation: return "ChaoticClosureViolation";
    case ErrorCode::kNotAGroupoid: return "NotAGroupoid";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(ErrorCodeName(code)) + ": " + what);
}

std::uint64_t DefaultBudget() {
  static const std::uint64_t budget = [] {
    const char* env = std::getenv("BIKERNEL_BUDGET");
    if (env != nullptr && *env != '\0') {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1) return std::uint64_t{v};
    }
    return std::uint64_t{10'000'000};
  }();
  return budget;
}

void Budget::Exhausted() const {
  Fail(ErrorCode::kEnumerationBudgetExceeded,
       "more than " + std::to_string(limit_) + " candidates");
}

}  // namespace bikernel
