// Copyright 2026 The qhc authors
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

#ifndef QHC_RECORD_HPP
#define QHC_RECORD_HPP

#include <map>
#include <optional>
#include <string>

namespace qhc {

using ParamMap = std::map<std::string, double>;

enum class CheckStatus { holds, violated, skipped_precondition, degenerate };

const char* to_string(CheckStatus status);

struct Tolerances {
  double rel = 1e-9;
  double abs = 1e-12;
};

/// Result of evaluating one inequality or identity on one instance. The
/// convention is lhs <= rhs; `ratio` is set whenever rhs > 1e-300.
struct CheckRecord {
  std::string check_id;
  std::string instance_id;
  ParamMap params;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<double> ratio;
  CheckStatus status = CheckStatus::holds;
  std::string note;
};

/// holds/violated per the shared slack rule: violated iff
/// lhs > rhs * (1 + rel) + abs.
CheckStatus resolve_status(double lhs, double rhs, const Tolerances& tol = {});

/// Fills lhs/rhs/ratio/status in one step.
void finish_record(CheckRecord& rec, double lhs, double rhs, const Tolerances& tol = {});

}  // namespace qhc

#endif
