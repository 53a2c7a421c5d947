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

#include "qhc/observable.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhc {

namespace {

void require_same_sites(const Observable& a, const Observable& b, const char* what) {
  if (a.sites() != b.sites()) {
    throw std::invalid_argument(std::string(what) + ": site counts differ (" +
                                std::to_string(a.sites()) + " vs " + std::to_string(b.sites()) + ")");
  }
}

void require_key(const PauliIndex& s, int sites, const char* what) {
  if (static_cast<int>(s.size()) != sites) {
    throw std::invalid_argument(std::string(what) + ": index length " + std::to_string(s.size()) +
                                " does not match n=" + std::to_string(sites));
  }
  for (auto d : s) {
    if (d > 3) throw std::invalid_argument(std::string(what) + ": digit out of {0,1,2,3}");
  }
}

}  // namespace

Observable::Observable(int sites) : sites_(sites) {
  if (sites < 0) throw std::invalid_argument("Observable: negative site count");
}

Observable Observable::from_terms(int sites, std::map<PauliIndex, Complex> terms) {
  Observable out(sites);
  for (auto it = terms.begin(); it != terms.end();) {
    require_key(it->first, sites, "Observable::from_terms");
    if (std::abs(it->second) < kStorageEpsilon) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  out.terms_ = std::move(terms);
  return out;
}

Complex Observable::coeff(const PauliIndex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void Observable::set_coeff(const PauliIndex& s, Complex c) {
  require_key(s, sites_, "Observable::set_coeff");
  if (std::abs(c) < kStorageEpsilon) {
    terms_.erase(s);
  } else {
    terms_[s] = c;
  }
}

void Observable::add_coeff(const PauliIndex& s, Complex c) {
  require_key(s, sites_, "Observable::add_coeff");
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kStorageEpsilon) terms_.erase(it);
}

Observable zero_observable(int sites) { return Observable(sites); }

Observable identity_observable(int sites) {
  Observable out(sites);
  out.set_coeff(PauliIndex(sites, 0), Complex{1.0, 0.0});
  return out;
}

Observable pauli_observable(const PauliIndex& s, Complex c) {
  Observable out(static_cast<int>(s.size()));
  out.set_coeff(s, c);
  return out;
}

Observable add(const Observable& a, const Observable& b) {
  require_same_sites(a, b, "add");
  std::map<PauliIndex, Complex> terms = a.terms();
  for (const auto& [s, c] : b.terms()) {
    auto [it, inserted] = terms.try_emplace(s, c);
    if (!inserted) it->second += c;
  }
  return Observable::from_terms(a.sites(), std::move(terms));
}

Observable subtract(const Observable& a, const Observable& b) {
  return add(a, scale(b, Complex{-1.0, 0.0}));
}

Observable scale(const Observable& a, Complex c) {
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, v] : a.terms()) terms.emplace(s, c * v);
  return Observable::from_terms(a.sites(), std::move(terms));
}

Observable adjoint(const Observable& a) {
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, v] : a.terms()) terms.emplace(s, std::conj(v));
  return Observable::from_terms(a.sites(), std::move(terms));
}

Observable multiply(const Observable& a, const Observable& b) {
  require_same_sites(a, b, "multiply");
  const int n = a.sites();
  std::map<PauliIndex, Complex> terms;
  PauliIndex key(n, 0);
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      std::uint8_t phase_power = 0;
      for (int j = 0; j < n; ++j) {
        const SiteProduct p = single_site_product(sa[j], sb[j]);
        phase_power = static_cast<std::uint8_t>((phase_power + p.phase_power) & 3u);
        key[j] = p.digit;
      }
      const Complex c = ca * cb * phase_value(phase_power);
      auto [it, inserted] = terms.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  return Observable::from_terms(n, std::move(terms));
}

Complex inner_product(const Observable& a, const Observable& b) {
  require_same_sites(a, b, "inner_product");
  // Iterate the smaller map.
  const Observable& small = a.term_count() <= b.term_count() ? a : b;
  const Observable& large = a.term_count() <= b.term_count() ? b : a;
  const bool small_is_a = &small == &a;
  Complex out{0.0, 0.0};
  for (const auto& [s, c] : small.terms()) {
    const Complex other = large.coeff(s);
    out += small_is_a ? std::conj(c) * other : std::conj(other) * c;
  }
  return out;
}

Complex trace(const Observable& a) { return a.coeff(PauliIndex(a.sites(), 0)); }

int degree(const Observable& a) {
  int deg = 0;
  for (const auto& [s, c] : a.terms()) deg = std::max(deg, support_size(s));
  return deg;
}

double norm2_squared(const Observable& a) {
  double out = 0.0;
  for (const auto& [s, c] : a.terms()) out += std::norm(c);
  return out;
}

double distance2_squared(const Observable& a, const Observable& b) {
  return norm2_squared(subtract(a, b));
}

double max_coeff_deviation(const Observable& a, const Observable& b) {
  const Observable diff = subtract(a, b);
  double out = 0.0;
  for (const auto& [s, c] : diff.terms()) out = std::max(out, std::abs(c));
  return out;
}

bool has_real_coeffs(const Observable& a, double tol) {
  for (const auto& [s, c] : a.terms()) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

}  // namespace qhc
