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

#include "qhc/hypercube.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qhc {

namespace {

void require_site(const Observable& t, int site, const char* what) {
  if (site < 0 || site >= t.sites()) {
    throw std::invalid_argument(std::string(what) + ": site " + std::to_string(site) +
                                " out of range for n=" + std::to_string(t.sites()));
  }
}

bool support_in(const PauliIndex& s, SiteSubset j_set) {
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    if (s[j] != 0 && !j_set.contains(j)) return false;
  }
  return true;
}

Observable map_multiplier(const Observable& t, const std::function<double(int)>& mult) {
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    terms.emplace_hint(terms.end(), s, mult(support_size(s)) * c);
  }
  return Observable::from_terms(t.sites(), std::move(terms));
}

}  // namespace

SiteSubset SiteSubset::of(int n, std::initializer_list<int> sites) {
  SiteSubset out{n, 0};
  for (int j : sites) {
    if (j < 0 || j >= n) throw std::invalid_argument("SiteSubset: site out of range");
    out.mask |= (1u << j);
  }
  return out;
}

SiteSubset SiteSubset::from_mask(int n, std::uint32_t mask) {
  if (n < 0 || n > 31) throw std::invalid_argument("SiteSubset: n out of range");
  if (mask >> n) throw std::invalid_argument("SiteSubset: mask has bits beyond n");
  return SiteSubset{n, mask};
}

SiteSubset SiteSubset::full(int n) {
  return SiteSubset{n, n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u))};
}

SiteSubset SiteSubset::empty(int n) { return SiteSubset{n, 0}; }

int SiteSubset::count() const { return std::popcount(mask); }

SiteSubset SiteSubset::complement() const { return SiteSubset{n, full(n).mask & ~mask}; }

SiteSubset SiteSubset::with(int site) const { return SiteSubset{n, mask | (1u << site)}; }

std::vector<int> SiteSubset::members() const {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

Observable partial_derivative(const Observable& t, int site) {
  require_site(t, site, "partial_derivative");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    if (s[site] != 0) terms.emplace_hint(terms.end(), s, c);
  }
  return Observable::from_terms(t.sites(), std::move(terms));
}

Observable bit_flip_reflection(const Observable& t, int site) {
  require_site(t, site, "bit_flip_reflection");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    terms.emplace_hint(terms.end(), s, s[site] != 0 ? -c : c);
  }
  return Observable::from_terms(t.sites(), std::move(terms));
}

Observable conditional_expectation(const Observable& t, SiteSubset j_set) {
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    if (support_in(s, j_set)) terms.emplace_hint(terms.end(), s, c);
  }
  return Observable::from_terms(t.sites(), std::move(terms));
}

Observable restriction(const Observable& t, int site, SiteSubset j_set) {
  require_site(t, site, "restriction");
  if (!j_set.contains(site)) return zero_observable(t.sites());
  return conditional_expectation(partial_derivative(t, site),
                                 j_set.complement().with(site));
}

Observable semigroup(const Observable& t, double time) {
  if (time < 0.0 || !std::isfinite(time)) {
    throw std::invalid_argument("semigroup: time must be finite and >= 0");
  }
  return map_multiplier(t, [time](int k) { return std::exp(-time * k); });
}

Observable generator_apply(const Observable& t) {
  return map_multiplier(t, [](int k) { return static_cast<double>(k); });
}

Observable delta_power(const Observable& t, double delta) {
  if (delta < 0.0 || delta > 1.0) {
    throw std::invalid_argument("delta_power: delta must lie in [0,1]");
  }
  return map_multiplier(t, [delta](int k) { return k == 0 ? 1.0 : std::pow(delta, k); });
}

double spectral_slice_multiplier(int d, int support) {
  return std::pow(1.0 - 0.5 / d, support) - std::pow(1.0 - 1.0 / d, support);
}

Observable spectral_slice(const Observable& t, int d) {
  if (d < 1 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("spectral_slice: d must be a positive power of two");
  }
  return map_multiplier(t, [d](int k) { return spectral_slice_multiplier(d, k); });
}

Observable rademacher_projection(const Observable& t, int d) {
  if (d < 0) throw std::invalid_argument("rademacher_projection: d must be >= 0");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    if (support_size(s) <= d) terms.emplace_hint(terms.end(), s, c);
  }
  return Observable::from_terms(t.sites(), std::move(terms));
}

double weight_eq(const Observable& t, int d) {
  double out = 0.0;
  for (const auto& [s, c] : t.terms()) {
    if (support_size(s) == d) out += std::norm(c);
  }
  return out;
}

double weight_geq(const Observable& t, int d) {
  double out = 0.0;
  for (const auto& [s, c] : t.terms()) {
    if (support_size(s) >= d) out += std::norm(c);
  }
  return out;
}

double weight_approx(const Observable& t, int d) {
  double out = 0.0;
  for (const auto& [s, c] : t.terms()) {
    const int k = support_size(s);
    if (k >= d && k < 2 * d) out += std::norm(c);
  }
  return out;
}

double variance_coeff(const Observable& t) { return weight_geq(t, 1); }

double influence(const Observable& t, int site, double p) {
  if (p < 1.0) throw std::invalid_argument("influence: p < 1 rejected");
  const Observable deriv = partial_derivative(t, site);
  if (p == 2.0) return norm2_squared(deriv);
  if (deriv.is_zero()) return 0.0;
  return std::pow(schatten_norm(synthesize(deriv), p), p);
}

double total_influence(const Observable& t, double p) {
  if (p == 2.0) {
    // Exact: sum_s |supp(s)| |coeff|^2.
    double out = 0.0;
    for (const auto& [s, c] : t.terms()) out += support_size(s) * std::norm(c);
    return out;
  }
  double out = 0.0;
  for (int j = 0; j < t.sites(); ++j) out += influence(t, j, p);
  return out;
}

double geometric_mass(const Observable& t, SiteSubset j_set) {
  double out = 0.0;
  for (int j : j_set.members()) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    const double l1 = schatten_norm(synthesize(deriv), 1.0);
    out += l1 * l1;
  }
  return out;
}

double geometric_mass(const Observable& t) {
  return geometric_mass(t, SiteSubset::full(t.sites()));
}

DenseOperator gradient_magnitude(const Observable& t) {
  const std::int64_t dim = std::int64_t{1} << t.sites();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < t.sites(); ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    const DenseOperator dj = synthesize(deriv);
    acc += dj.mat.adjoint() * dj.mat;
  }
  return matrix_sqrt(DenseOperator{t.sites(), std::move(acc)});
}

double gradient_lp(const Observable& t, double p) {
  return schatten_norm(gradient_magnitude(t), p);
}

IndexResult index_of(const Observable& t) {
  bool any_constraint = false;
  double best = 0.0;
  for (int j = 0; j < t.sites(); ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    const double l2sq = norm2_squared(deriv);
    const double l1 = schatten_norm(synthesize(deriv), 1.0);
    if (l1 >= 1.0 - 1e-12) {
      return IndexResult{0.0, IndexStatus::undefined};
    }
    any_constraint = true;
    // x^alpha <= y with x < 1: alpha >= ln(y)/ln(x); vacuous when y >= 1.
    if (l2sq < 1.0) best = std::max(best, std::log(l2sq) / std::log(l1));
  }
  if (!any_constraint) return IndexResult{0.0, IndexStatus::degenerate};
  return IndexResult{best, IndexStatus::ok};
}

bool is_projection(const Observable& t, double tol) {
  if (!has_real_coeffs(t, tol)) return false;
  const Observable gap = multiply(t, t) - t;
  if (gap.is_zero()) return true;
  return schatten_norm(synthesize(gap), kPInf) <= tol;
}

bool is_quantum_boolean(const Observable& t, double tol) {
  if (!has_real_coeffs(t, tol)) return false;
  const Observable gap = multiply(t, t) - identity_observable(t.sites());
  if (gap.is_zero()) return true;
  return schatten_norm(synthesize(gap), kPInf) <= tol;
}

Observable boolean_to_projection(const Observable& t) {
  return scale(add(identity_observable(t.sites()), t), Complex{0.5, 0.0});
}

}  // namespace qhc
