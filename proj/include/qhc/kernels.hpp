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

#ifndef QHC_KERNELS_HPP
#define QHC_KERNELS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "qhc/observable.hpp"

// Hot loops, each in a serial reference version and an OpenMP version.
// The parallel versions partition work over independent output slots, so both
// versions produce bit-identical results; tests compare them directly and
// qhc_bench times them against each other.
namespace qhc::kernels {

/// Basis words have exactly one nonzero entry per row: column = row ^ flip
/// mask, value = product of single-site entries.
struct RowEntry {
  std::int64_t col;
  Complex val;
};

RowEntry pauli_row_entry(const PauliIndex& s, std::int64_t row);

/// Encode/decode a word as an integer in base 4, site 0 most significant, so
/// numeric order matches lexicographic order of the digit sequence.
std::uint64_t encode_index(const PauliIndex& s);
PauliIndex decode_index(std::uint64_t code, int sites);

Eigen::MatrixXcd synthesize_serial(const Observable& obs);
Eigen::MatrixXcd synthesize_parallel(const Observable& obs);

Observable analyze_serial(const Eigen::MatrixXcd& mat, int sites,
                          double drop_epsilon = kStorageEpsilon);
Observable analyze_parallel(const Eigen::MatrixXcd& mat, int sites,
                            double drop_epsilon = kStorageEpsilon);

/// Fixed-tree pairwise sum; result does not depend on thread count because the
/// tree is determined by the length alone.
double pairwise_sum(std::span<const double> values);

/// Fills values[i] = f(i) for i in [0, count) in parallel, then reduces with
/// pairwise_sum. Deterministic for a fixed count.
double parallel_pairwise_sum(std::int64_t count, const std::function<double(std::int64_t)>& f);

}  // namespace qhc::kernels

#endif
