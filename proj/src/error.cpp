/*
  Copyright 2026 The oamring Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "oamring/error.hpp"

namespace oamring {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid parameter";
    case ErrorCode::CutoffInsufficient: return "cutoff insufficient";
    case ErrorCode::StepSize: return "step size";
    case ErrorCode::Convergence: return "convergence";
    case ErrorCode::RevivalNotFound: return "revival not found";
    case ErrorCode::IndeterminateImbalance: return "indeterminate imbalance";
    case ErrorCode::CentroidUndefined: return "centroid undefined";
    case ErrorCode::Configuration: return "configuration";
    case ErrorCode::NotApplicable: return "not applicable";
    case ErrorCode::Io: return "i/o";
  }
  return "unknown";
}

}  // namespace oamring
