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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "qhc/harness.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 0;
  int n_cap = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* config = cmd->add_option("--config", flags.config_path, "run configuration (JSON)");
  if (config_required) config->required();
  cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
  cmd->add_option("--seed", flags.seed, "global seed (overrides config)")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  cmd->add_option("--jobs", flags.jobs, "worker count (0 = default)");
  cmd->add_option("--n-cap", flags.n_cap, "dense site cap");
}

qhc::RunConfig resolve_config(const CommonFlags& flags) {
  qhc::RunConfig config;
  if (!flags.config_path.empty()) config = qhc::load_config(flags.config_path);
  if (!flags.out_dir.empty()) config.output = flags.out_dir;
  if (flags.seed_set) {
    config.seed = flags.seed;
    for (auto& spec : config.ensembles) spec.seed = flags.seed;
  }
  if (flags.jobs > 0) config.parallelism = flags.jobs;
  if (flags.n_cap > 0) config.n_cap = flags.n_cap;
  for (const auto& spec : config.ensembles) {
    if (spec.n > 8) {
      std::cerr << "warning: ensemble " << spec.describe()
                << " is above n = 8; dense work grows as 8^n\n";
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum hypercube inequality workbench"};
  app.require_subcommand(1);

  CommonFlags verify_flags, constants_flags, witness_flags;
  std::string spectrum_path;
  std::string witness_check;

  auto* verify = app.add_subcommand("verify", "run checks over ensembles, write records");
  add_common(verify, verify_flags, true);

  auto* constants = app.add_subcommand("constants", "estimate per-check constants");
  add_common(constants, constants_flags, true);

  auto* spectrum = app.add_subcommand("spectrum", "spectral report for an observable JSON file");
  spectrum->add_option("file", spectrum_path, "observable JSON path")->required();

  auto* witness = app.add_subcommand("witness", "search for an extremal instance of one check");
  witness->add_option("check", witness_check, "registry check id")->required();
  add_common(witness, witness_flags, true);

  auto* selftest = app.add_subcommand("selftest", "built-in sanity suite");
  (void)selftest;

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return qhc::run_verify(resolve_config(verify_flags), std::cout);
    if (constants->parsed()) return qhc::run_constants(resolve_config(constants_flags), std::cout);
    if (spectrum->parsed()) return qhc::run_spectrum(spectrum_path, std::cout);
    if (witness->parsed()) {
      return qhc::run_witness(witness_check, resolve_config(witness_flags), std::cout);
    }
    if (selftest->parsed()) return qhc::run_selftest(std::cout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
