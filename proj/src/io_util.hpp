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

// Parsing helpers shared by the JSON readers.

#include <string>
#include <unordered_map>
#include <vector>

#include "bikernel/error.hpp"
#include "bikernel/io.hpp"

namespace bikernel::io_detail {

inline std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : key) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::string join_key(std::initializer_list<std::string> parts) {
  std::string out;
  bool first = true;
  for (const std::string& s : parts) {
    if (!first) out.push_back(';');
    out += s;
    first = false;
  }
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& msg) {
  Fail(ErrorCode::kParseError, path + ": " + msg);
}

inline const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  return j;
}

inline std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

inline void check_token(const std::string& tok, const std::string& path) {
  if (tok.empty()) parse_fail(path, "empty token");
  if (tok.find(';') != std::string::npos) parse_fail(path, "token '" + tok + "' contains ';'");
}

// Name lookups during parsing, before finalize() builds the indices.
struct Names {
  std::unordered_map<std::string, Id> obj, one, two;

  static Id get(const std::unordered_map<std::string, Id>& m, const std::string& tok,
                const std::string& path, const char* tier) {
    auto it = m.find(tok);
    if (it == m.end()) {
      Fail(ErrorCode::kDanglingReference,
           path + ": unknown " + std::string(tier) + " '" + tok + "'");
    }
    return it->second;
  }
};


}  // namespace bikernel::io_detail
