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
#include <stdexcept>
#include <string>

namespace bikernel {

enum class ErrorCode {
  kDuplicateId,
  kDanglingReference,
  kTypeMismatch,
  kEnumerationBudgetExceeded,
  kNotStrict,
  kInvalidMonoid,
  kPreconditionFailed,
  kConstructionFailed,
  kChaoticClosureViolation,
  kNotAGroupoid,
  kParseError,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& what);

// Enumeration budget. The default is 10^7 candidate tuples; the
// BIKERNEL_BUDGET environment variable overrides it at first use.
std::uint64_t DefaultBudget();

// Counts enumeration steps and throws once the limit is crossed. Not
// shared between threads; each operation creates its own.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = DefaultBudget()) : limit_(limit) {}
  void Spend(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) Exhausted();
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  [[noreturn]] void Exhausted() const;
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace bikernel
