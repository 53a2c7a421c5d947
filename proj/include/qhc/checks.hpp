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

#ifndef QHC_CHECKS_HPP
#define QHC_CHECKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhc/ensembles.hpp"
#include "qhc/observable.hpp"
#include "qhc/record.hpp"

namespace qhc {

/// How the free constant enters a check, which fixes how an estimated
/// supremum turns into a constant that holds on every tested instance.
///   none      no free constant (violations are hard failures)
///   scale_rhs lhs <= K * rhs0; safe K = sup(lhs/rhs0) * margin
///   scale_lhs K * lhs0 <= rhs; safe K = 1 / (sup(lhs0/rhs) * margin)
///   exp_rate  the constant sits inside an exponential; the ratio reported is
///             the minimal constant making the instance hold, so safe
///             K = sup * margin
enum class ConstantForm { none, scale_rhs, scale_lhs, exp_rate };

struct CheckDef {
  std::string id;
  bool unconditional = true;
  ConstantForm form = ConstantForm::none;
  std::string constant_name;
  std::vector<ParamMap> default_params{{}};
  std::function<CheckRecord(const Observable&, const ParamMap&, const Tolerances&)> eval;
  /// Constant-free ratio used by estimate_constant; nullopt when the instance
  /// does not meet the hypothesis or is degenerate.
  std::function<std::optional<double>(const Observable&, const ParamMap&)> ratio;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& id);

/// Evaluates one registry entry. Throws on unknown ids; preconditions are
/// reported through the record status, never as errors.
CheckRecord run_check(const std::string& id, const Observable& t, const ParamMap& params = {},
                      const Tolerances& tol = {});

double safe_constant(const CheckDef& def, double sup_ratio, double margin = 1.01);

struct EstimateResult {
  double sup_ratio = 0.0;
  std::string witness;
  std::vector<CheckRecord> records;
  int eligible = 0;  // instances that produced a ratio
  std::string note;  // set when nothing was eligible
};

/// Supremum of the constant-free ratio over the ensemble, the witness
/// instance, and all records. Deterministic given the spec.
EstimateResult estimate_constant(const std::string& id, const EnsembleSpec& ensemble,
                                 const ParamMap& params = {});

/// Registry ids that make sense to estimate (form != none).
std::vector<std::string> constant_check_ids();

/// Fallback subset used by J-parameterized checks when no mask is supplied:
/// the first ceil(n/2) sites.
std::uint32_t default_j_mask(int n);

}  // namespace qhc

#endif
