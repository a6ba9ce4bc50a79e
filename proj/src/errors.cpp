// SPDX-License-Identifier: Apache-2.0
//
// mcia - closed-form interference alignment for multi-cell downlink networks
// Copyright (C) 2026 The mcia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "mcia/errors.hpp"

namespace mcia {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyNullSpace: return "EmptyNullSpace";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::UnknownApproach: return "UnknownApproach";
    case ErrorKind::InfeasibleAntennas: return "InfeasibleAntennas";
    case ErrorKind::SingularConstruction: return "SingularConstruction";
    case ErrorKind::MissingCodebook: return "MissingCodebook";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    case ErrorKind::TrialFailed: return "TrialFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace mcia
