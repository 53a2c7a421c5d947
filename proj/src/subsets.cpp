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

#include "qhc/subsets.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qhc/kernels.hpp"

namespace qhc {

namespace {

void require_delta(double delta) {
  if (delta < 0.0 || delta > 1.0) {
    throw std::invalid_argument("subset distribution: delta must lie in [0,1]");
  }
}

std::uint32_t support_mask(const PauliIndex& s) {
  std::uint32_t mask = 0;
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    if (s[j] != 0) mask |= (1u << j);
  }
  return mask;
}

}  // namespace

SiteSubset sample_subset(const SubsetDistribution& dist, Rng& rng) {
  require_delta(dist.delta);
  SiteSubset out = SiteSubset::empty(dist.n);
  for (int j = 0; j < dist.n; ++j) {
    if (rng.bernoulli(dist.delta)) out.mask |= (1u << j);
  }
  return out;
}

std::vector<std::pair<SiteSubset, double>> enumerate_subsets(const SubsetDistribution& dist) {
  require_delta(dist.delta);
  if (dist.n < 0 || dist.n > kEnumerationCap) {
    throw std::invalid_argument("enumerate_subsets: site count beyond enumeration cap");
  }
  const std::uint32_t total = 1u << dist.n;
  std::vector<std::pair<SiteSubset, double>> out;
  out.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const int k = std::popcount(mask);
    const double w = std::pow(dist.delta, k) * std::pow(1.0 - dist.delta, dist.n - k);
    out.emplace_back(SiteSubset{dist.n, mask}, w);
  }
  return out;
}

double single_hit_probability(int support_size, int d) {
  if (d < 1) throw std::invalid_argument("single_hit_probability: d must be >= 1");
  if (support_size <= 0) return 0.0;
  if (support_size == 1) return 1.0 / d;
  return std::pow(1.0 - 1.0 / d, support_size - 1) * (static_cast<double>(support_size) / d);
}

CheckRecord check_tav(const Observable& t, double delta) {
  require_delta(delta);
  CheckRecord rec;
  rec.check_id = "tav";
  rec.params = {{"delta", delta}};
  if (t.sites() > kEnumerationCap) {
    rec.status = CheckStatus::skipped_precondition;
    rec.note = "site count beyond enumeration cap";
    return rec;
  }
  const Observable lhs = delta_power(t, delta);

  // Subset-averaged conditional expectation, coefficient by coefficient. Each
  // term survives under exactly the subsets containing its support, so its
  // averaged coefficient is coeff * sum of those weights. The weight sum is
  // accumulated by full enumeration with a fixed-tree pairwise sum.
  const auto subsets = enumerate_subsets({t.sites(), delta});
  std::map<PauliIndex, Complex> averaged;
  std::vector<double> weights;
  weights.reserve(subsets.size());
  for (const auto& [s, c] : t.terms()) {
    const std::uint32_t need = support_mask(s);
    weights.clear();
    for (const auto& [subset, w] : subsets) {
      if ((subset.mask & need) == need) weights.push_back(w);
    }
    const double total = kernels::pairwise_sum(weights);
    averaged.emplace(s, c * total);
  }
  const Observable rhs_obs = Observable::from_terms(t.sites(), std::move(averaged));

  const double deviation = max_coeff_deviation(lhs, rhs_obs);
  rec.lhs = deviation;
  rec.rhs = 1e-12;
  rec.ratio = deviation / 1e-12;
  rec.status = deviation <= 1e-12 ? CheckStatus::holds : CheckStatus::violated;
  rec.note = "max coefficient deviation vs exact enumeration";
  return rec;
}

double restriction_mass(const Observable& t, SiteSubset j_set) {
  // sum_{j in J} ||R_j^J T||_2^2 = sum over terms whose support meets J in
  // exactly one site of |coeff|^2.
  std::vector<double> addends;
  addends.reserve(t.term_count());
  for (const auto& [s, c] : t.terms()) {
    const std::uint32_t hit = support_mask(s) & j_set.mask;
    if (hit != 0 && (hit & (hit - 1)) == 0) addends.push_back(std::norm(c));
  }
  return kernels::pairwise_sum(addends);
}

ZrrResult zrr_expectation(const Observable& t, int d) {
  if (d < 1) throw std::invalid_argument("zrr_expectation: d must be >= 1");
  ZrrResult result;
  CheckRecord& rec = result.record;
  rec.check_id = "zrr";
  rec.params = {{"d", static_cast<double>(d)}};

  // Exact spectral formula for the expectation.
  std::vector<double> addends;
  addends.reserve(t.term_count());
  for (const auto& [s, c] : t.terms()) {
    addends.push_back(std::norm(c) * single_hit_probability(support_size(s), d));
  }
  result.expectation = kernels::pairwise_sum(addends);

  // Witness subset achieving at least the mean.
  result.witness = SiteSubset::empty(t.sites());
  if (t.sites() <= kEnumerationCap) {
    double best = -1.0;
    for (const auto& [subset, w] : enumerate_subsets({t.sites(), 1.0 / d})) {
      const double mass = restriction_mass(t, subset);
      if (mass > best) {
        best = mass;
        result.witness = subset;
      }
    }
  } else {
    Rng rng(0x5eed);
    double best = -1.0;
    for (int trial = 0; trial < 4096; ++trial) {
      SiteSubset subset = sample_subset({t.sites(), 1.0 / d}, rng);
      const double mass = restriction_mass(t, subset);
      if (mass > best) {
        best = mass;
        result.witness = subset;
      }
    }
  }

  finish_record(rec, weight_approx(t, d) / 8.0, result.expectation);
  rec.note = "lhs = W_approx(d)/8; rhs = exact expectation over mu_{1/d}";
  return result;
}

}  // namespace qhc
