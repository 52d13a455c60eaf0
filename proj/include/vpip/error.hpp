// Copyright 2026 the vpip authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpip {

enum class ErrorCode {
  TooFewVertices,
  NotConvex,
  DegenerateEdge,
  NonFinite,
  GeneratorCollision,
  InvalidParameter,
  ParseError,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "too few vertices";
    case ErrorCode::NotConvex: return "not convex";
    case ErrorCode::DegenerateEdge: return "degenerate edge";
    case ErrorCode::NonFinite: return "non-finite value";
    case ErrorCode::GeneratorCollision: return "generator collision";
    case ErrorCode::InvalidParameter: return "invalid parameter";
    case ErrorCode::ParseError: return "parse error";
  }
  return "unknown";
}

/// Thrown by polygon validation, the generator conversion, samplers and the
/// file readers on bad input.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace vpip
