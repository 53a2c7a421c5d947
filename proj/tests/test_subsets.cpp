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

#include <doctest.h>

#include <bit>
#include <cmath>

#include "qhc/ensembles.hpp"
#include "qhc/kernels.hpp"
#include "qhc/subsets.hpp"
#include "test_util.hpp"

using namespace qhc;

TEST_CASE("degenerate deltas") {
  Rng rng(61);
  CHECK(sample_subset({5, 0.0}, rng).count() == 0);
  CHECK(sample_subset({5, 1.0}, rng).count() == 5);
}

TEST_CASE("enumeration lists all subsets with exact weights") {
  const auto subsets = enumerate_subsets({2, 0.5});
  REQUIRE(subsets.size() == 4);
  for (const auto& [subset, w] : subsets) CHECK(w == doctest::Approx(0.25).epsilon(1e-14));

  const auto skewed = enumerate_subsets({6, 0.3});
  std::vector<double> weights;
  for (const auto& [subset, w] : skewed) weights.push_back(w);
  CHECK(std::abs(kernels::pairwise_sum(weights) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(enumerate_subsets({25, 0.5}), std::invalid_argument);
}

TEST_CASE("inclusion frequency matches delta within binomial error") {
  Rng rng(62);
  const int trials = 100000;
  int hits = 0;
  for (int k = 0; k < trials; ++k) {
    if (sample_subset({4, 0.3}, rng).contains(0)) ++hits;
  }
  const double freq = static_cast<double>(hits) / trials;
  const double sigma = std::sqrt(0.3 * 0.7 / trials);
  CHECK(std::abs(freq - 0.3) <= 3.0 * sigma);
}

TEST_CASE("subset-inclusion expectation per site equals delta") {
  for (double delta : {0.25, 0.6}) {
    const auto subsets = enumerate_subsets({4, delta});
    for (int site = 0; site < 4; ++site) {
      double mass = 0.0;
      for (const auto& [subset, w] : subsets) {
        if (subset.contains(site)) mass += w;
      }
      CHECK(mass == doctest::Approx(delta).epsilon(1e-12));
    }
  }
}

TEST_CASE("tav identity is exact for random elements") {
  Rng rng(63);
  for (double delta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const Observable t = testutil::random_complex(3, 12, rng);
    const CheckRecord rec = check_tav(t, delta);
    CHECK(rec.status == CheckStatus::holds);
    CHECK(rec.lhs <= 1e-12);
  }
}

TEST_CASE("single hit probability closed form") {
  CHECK(single_hit_probability(1, 1) == doctest::Approx(1.0));
  CHECK(single_hit_probability(2, 2) == doctest::Approx(0.5));
  CHECK(single_hit_probability(0, 3) == 0.0);
  // Against enumeration: P(|supp cap J| = 1) for a fixed support.
  for (int d : {1, 2, 4}) {
    for (int support : {1, 2, 3, 4}) {
      const auto subsets = enumerate_subsets({4, 1.0 / d});
      const std::uint32_t support_mask = (1u << support) - 1u;
      double mass = 0.0;
      for (const auto& [subset, w] : subsets) {
        if (std::popcount(subset.mask & support_mask) == 1) mass += w;
      }
      CHECK(single_hit_probability(support, d) == doctest::Approx(mass).epsilon(1e-12));
    }
  }
}

TEST_CASE("zrr expectation: closed form equals enumeration and the bound holds") {
  Rng rng(64);
  EnsembleSpec spec{"random_contraction", 4, 65, 2, {}, "", {}};
  for (const auto& instance : make_ensemble(spec)) {
    for (int d : {1, 2, 4}) {
      const ZrrResult result = zrr_expectation(instance.obs, d);
      CHECK(result.record.status == CheckStatus::holds);

      // Enumeration oracle for the expectation.
      double expect = 0.0;
      for (const auto& [subset, w] : enumerate_subsets({4, 1.0 / d})) {
        expect += w * restriction_mass(instance.obs, subset);
      }
      CHECK(result.expectation == doctest::Approx(expect).epsilon(1e-12));
      // The witness achieves at least the mean.
      CHECK(restriction_mass(instance.obs, result.witness) >= result.expectation - 1e-12);
    }
  }
}

TEST_CASE("restriction mass equals the explicit per-site sum") {
  Rng rng(66);
  const Observable t = testutil::random_hermitian(4, 16, rng);
  const SiteSubset j_set = SiteSubset::of(4, {1, 3});
  double direct = 0.0;
  for (int j : j_set.members()) direct += norm2_squared(restriction(t, j, j_set));
  CHECK(restriction_mass(t, j_set) == doctest::Approx(direct).epsilon(1e-12));
}
