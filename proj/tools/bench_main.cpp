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

// Times the serial reference kernels against their OpenMP versions and checks
// they agree bit-for-bit on the way.

#include <chrono>
#include <cstdio>
#include <functional>

#include "qhc/dense.hpp"
#include "qhc/ensembles.hpp"
#include "qhc/kernels.hpp"
#include "qhc/rng.hpp"
#include "qhc/subsets.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  const auto t0 = Clock::now();
  for (int k = 0; k < repeats; ++k) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

}  // namespace

int main() {
  std::printf("%-26s %6s %12s %12s %9s\n", "kernel", "n", "serial ms", "parallel ms", "speedup");
  for (int n : {6, 8}) {
    qhc::EnsembleSpec spec{"random_low_degree", n, 99, 1, {{"d", std::min(n, 4)}}, "", {}};
    const qhc::Observable obs = qhc::make_instance(spec, 0).obs;

    const auto serial_mat = qhc::kernels::synthesize_serial(obs);
    const auto parallel_mat = qhc::kernels::synthesize_parallel(obs);
    if (!(serial_mat.array() == parallel_mat.array()).all()) {
      std::printf("synthesize mismatch at n=%d\n", n);
      return 1;
    }
    const int reps = n >= 8 ? 3 : 10;
    const double synth_serial =
        time_ms([&] { (void)qhc::kernels::synthesize_serial(obs); }, reps);
    const double synth_parallel =
        time_ms([&] { (void)qhc::kernels::synthesize_parallel(obs); }, reps);
    std::printf("%-26s %6d %12.3f %12.3f %8.2fx\n", "synthesize", n, synth_serial,
                synth_parallel, synth_serial / synth_parallel);

    const qhc::Observable from_serial = qhc::kernels::analyze_serial(serial_mat, n);
    const qhc::Observable from_parallel = qhc::kernels::analyze_parallel(serial_mat, n);
    if (!(from_serial == from_parallel)) {
      std::printf("analyze mismatch at n=%d\n", n);
      return 1;
    }
    const double analyze_serial =
        time_ms([&] { (void)qhc::kernels::analyze_serial(serial_mat, n); }, reps);
    const double analyze_parallel =
        time_ms([&] { (void)qhc::kernels::analyze_parallel(serial_mat, n); }, reps);
    std::printf("%-26s %6d %12.3f %12.3f %8.2fx\n", "analyze", n, analyze_serial,
                analyze_parallel, analyze_serial / analyze_parallel);
  }

  // Subset-average reduction at a fixed n.
  {
    const int n = 20;
    qhc::Rng rng(5);
    std::vector<double> values(std::size_t{1} << n);
    for (auto& v : values) v = rng.normal();
    const double direct = qhc::kernels::pairwise_sum(values);
    const double parallel = qhc::kernels::parallel_pairwise_sum(
        static_cast<std::int64_t>(values.size()), [&](std::int64_t i) { return values[i]; });
    if (direct != parallel) {
      std::printf("pairwise sum mismatch\n");
      return 1;
    }
    const double fill_serial = time_ms(
        [&] {
          std::vector<double> copy(values.size());
          for (std::size_t i = 0; i < values.size(); ++i) copy[i] = values[i] * 2.0;
          (void)qhc::kernels::pairwise_sum(copy);
        },
        50);
    const double fill_parallel = time_ms(
        [&] {
          (void)qhc::kernels::parallel_pairwise_sum(
              static_cast<std::int64_t>(values.size()),
              [&](std::int64_t i) { return values[i] * 2.0; });
        },
        50);
    std::printf("%-26s %6d %12.3f %12.3f %8.2fx\n", "pairwise_reduce", n, fill_serial,
                fill_parallel, fill_serial / fill_parallel);
  }
  return 0;
}
