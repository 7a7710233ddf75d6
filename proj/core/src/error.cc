// Copyright 2026 The RQG Authors
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

#include "rqg/error.h"

namespace rqg {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kZeroState: return "ZeroState";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kDegenerateSuperposition: return "DegenerateSuperposition";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kInvalidDimensions: return "InvalidDimensions";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInvalidPayoffs: return "InvalidPayoffs";
    case ErrorKind::kInvalidOffers: return "InvalidOffers";
    case ErrorKind::kInvalidMoveSet: return "InvalidMoveSet";
    case ErrorKind::kInvalidProbability: return "InvalidProbability";
    case ErrorKind::kWrongCase: return "WrongCase";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace rqg
