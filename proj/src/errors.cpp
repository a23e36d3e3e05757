// Copyright 2026 The growthlab Authors
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

#include "growthlab/errors.hpp"

namespace growthlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kAutomorphismInverse: return "automorphism-inverse";
    case ErrorCode::kAutomorphismRelator: return "automorphism-relator";
    case ErrorCode::kUnknownGenerator: return "unknown-generator";
    case ErrorCode::kUnsupportedFamily: return "unsupported-family";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNonConvergence: return "non-convergence";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

}  // namespace growthlab
