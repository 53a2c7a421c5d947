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

#ifndef QHC_HARNESS_HPP
#define QHC_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qhc/checks.hpp"
#include "qhc/ensembles.hpp"
#include "qhc/record.hpp"

namespace qhc {

struct CheckRequest {
  std::string id;
  ParamMap params;
  bool explicit_params = false;  // false: expand the registry default grid
};

struct RunConfig {
  std::vector<CheckRequest> checks;
  std::vector<EnsembleSpec> ensembles;
  std::string output = "out";
  std::uint64_t seed = 0;
  int parallelism = 0;  // 0 keeps the OpenMP default
  int n_cap = kMaxDenseSites;
  Tolerances tolerances;
};

RunConfig config_from_json(const std::string& text);
RunConfig load_config(const std::string& path);

/// Runs every (check, param set, instance) task, writes records.jsonl and
/// summary.csv under config.output. Exit 0 iff no unconditional check is
/// violated; runtime failures exit 1 with the failing pair identified.
int run_verify(const RunConfig& config, std::ostream& log);

/// estimate_constant per (check, param set, ensemble); writes constants.csv.
int run_constants(const RunConfig& config, std::ostream& log);

/// Spectral report (weights, variance, influences, M, index, degree) as JSON.
int run_spectrum(const std::string& observable_path, std::ostream& out);

/// Random-restart local search maximizing the constant-free ratio over the
/// first ensemble's parameter space; writes the best instance under
/// config.output and reports the ratio.
int run_witness(const std::string& check_id, const RunConfig& config, std::ostream& log);

/// Built-in sanity suite including the corrupted-checker negative control.
int run_selftest(std::ostream& log);

/// All records for a config, in deterministic task order. Shared by
/// run_verify and tests.
std::vector<CheckRecord> collect_records(const RunConfig& config);

}  // namespace qhc

#endif
