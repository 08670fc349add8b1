// Copyright 2026 The gkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkc/error.hpp"

namespace gkc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OverlappingOperands: return "OverlappingOperands";
    case ErrorCode::InvalidGate: return "InvalidGate";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::UnloweredGate: return "UnloweredGate";
    case ErrorCode::NoInvalidColors: return "NoInvalidColors";
    case ErrorCode::NoSolutions: return "NoSolutions";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MalformedCoupling: return "MalformedCoupling";
    case ErrorCode::TooFewPhysicalQubits: return "TooFewPhysicalQubits";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AncillaLeak: return "AncillaLeak";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) {
  return code == ErrorCode::TooManyQubits || code == ErrorCode::TooLarge;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what),
      code_(code) {}

}  // namespace gkc
