// Copyright 2026 The lglab Authors
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

#include "lglab/error.hpp"

namespace lglab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::Unclassified: return "Unclassified";
    case ErrorCode::NotTriangularizable: return "NotTriangularizable";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::WrongTopology: return "WrongTopology";
    case ErrorCode::DegenerateHeight: return "DegenerateHeight";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lglab
