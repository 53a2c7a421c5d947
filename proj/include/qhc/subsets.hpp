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

#ifndef QHC_SUBSETS_HPP
#define QHC_SUBSETS_HPP

#include <utility>
#include <vector>

#include "qhc/hypercube.hpp"
#include "qhc/record.hpp"
#include "qhc/rng.hpp"

namespace qhc {

/// Product measure on subsets of [n]: each site included independently with
/// probability delta.
struct SubsetDistribution {
  int n = 0;
  double delta = 0.0;
};

inline constexpr int kEnumerationCap = 20;

SiteSubset sample_subset(const SubsetDistribution& dist, Rng& rng);

/// All 2^n subsets with their exact weights (sum to 1 within 1e-12).
/// Refused above kEnumerationCap sites.
std::vector<std::pair<SiteSubset, double>> enumerate_subsets(const SubsetDistribution& dist);

/// Probability under the 1/d-subset measure that the support of a word of the
/// given size meets J in exactly one site.
double single_hit_probability(int support_size, int d);

/// Exact identity: delta^L(T) equals the subset-average of conditional
/// expectations. Compares both sides coefficient-wise over a full enumeration.
CheckRecord check_tav(const Observable& t, double delta);

struct ZrrResult {
  CheckRecord record;
  SiteSubset witness;          // subset achieving at least the mean
  double expectation = 0.0;    // E_J sum_{j in J} ||R_j^J T||_2^2
};

/// Lower bound (1/8) W_{about d}(T) <= E_J[...] at selection probability 1/d;
/// the expectation is computed by the exact spectral formula and the witness
/// by enumeration (or sampling beyond the cap).
ZrrResult zrr_expectation(const Observable& t, int d);

/// sum_{j in J} ||R_j^J T||_2^2, evaluated in coefficient space.
double restriction_mass(const Observable& t, SiteSubset j_set);

}  // namespace qhc

#endif
