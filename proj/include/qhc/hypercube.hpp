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

#ifndef QHC_HYPERCUBE_HPP
#define QHC_HYPERCUBE_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qhc/dense.hpp"
#include "qhc/observable.hpp"

namespace qhc {

/// Subset of sites {0, ..., n-1}, stored as a bitmask.
struct SiteSubset {
  int n = 0;
  std::uint32_t mask = 0;

  static SiteSubset of(int n, std::initializer_list<int> sites);
  static SiteSubset from_mask(int n, std::uint32_t mask);
  static SiteSubset full(int n);
  static SiteSubset empty(int n);

  bool contains(int site) const { return (mask >> site) & 1u; }
  int count() const;
  SiteSubset complement() const;
  SiteSubset with(int site) const;
  std::vector<int> members() const;
};

// Coefficient-diagonal operators. These never go through dense matrices.

/// Keeps exactly the terms with a nonzero digit at `site`; idempotent.
Observable partial_derivative(const Observable& t, int site);

/// Negates coefficients of terms with a nonzero digit at `site`; an isometry
/// for every L_p. partial_derivative(t, j) == (t - bit_flip_reflection(t, j))/2.
Observable bit_flip_reflection(const Observable& t, int site);

/// Keeps exactly the terms with support contained in `j_set`.
Observable conditional_expectation(const Observable& t, SiteSubset j_set);

/// Conditional expectation of the j-th derivative onto sites J^c + {j};
/// zero when j is outside J.
Observable restriction(const Observable& t, int site, SiteSubset j_set);

/// Coefficient multiplier exp(-t |supp(s)|); t >= 0.
Observable semigroup(const Observable& t, double time);

/// Coefficient multiplier |supp(s)| (the semigroup generator).
Observable generator_apply(const Observable& t);

/// Coefficient multiplier delta^|supp(s)|; delta in [0, 1].
Observable delta_power(const Observable& t, double delta);

/// Dyadic slice (1 - 1/2d)^L - (1 - 1/d)^L; d must be a power of two.
Observable spectral_slice(const Observable& t, int d);

/// Multiplier of spectral_slice at a given support size.
double spectral_slice_multiplier(int d, int support);

/// Truncation to support size <= d.
Observable rademacher_projection(const Observable& t, int d);

double weight_eq(const Observable& t, int d);       // sum |coeff|^2 at |supp| = d
double weight_geq(const Observable& t, int d);      // ... at |supp| >= d
double weight_approx(const Observable& t, int d);   // ... at d <= |supp| < 2d

/// Variance from coefficients: sum over nonzero indices of |coeff|^2.
double variance_coeff(const Observable& t);

/// L2 influences are exact coefficient sums; other p go through a dense norm.
double influence(const Observable& t, int site, double p);
double total_influence(const Observable& t, double p);

/// Sum over J of squared L1 norms of the site derivatives.
double geometric_mass(const Observable& t, SiteSubset j_set);
double geometric_mass(const Observable& t);

/// PSD square root of sum_j d_j(T)^* d_j(T), synthesized densely.
DenseOperator gradient_magnitude(const Observable& t);
double gradient_lp(const Observable& t, double p);

enum class IndexStatus { ok, degenerate, undefined };

/// Smallest alpha >= 0 with ||d_j T||_1^alpha <= ||d_j T||_2^2 at every site.
/// degenerate: no site constrains (all derivatives vanish; value 0).
/// undefined: some ||d_j T||_1 >= 1, where the infimum may not exist.
struct IndexResult {
  double value = 0.0;
  IndexStatus status = IndexStatus::ok;
};

IndexResult index_of(const Observable& t);

bool is_projection(const Observable& t, double tol = 1e-9);
bool is_quantum_boolean(const Observable& t, double tol = 1e-9);
Observable boolean_to_projection(const Observable& t);

}  // namespace qhc

#endif
