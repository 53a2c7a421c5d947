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

#ifndef QHC_OBSERVABLE_HPP
#define QHC_OBSERVABLE_HPP

#include <map>

#include "qhc/pauli.hpp"

namespace qhc {

/// Coefficients with magnitude below this are dropped on canonicalization.
inline constexpr double kStorageEpsilon = 1e-14;

/// An element of the n-site matrix algebra stored by its basis coefficients.
/// Canonical form: every stored key has length n and every stored coefficient
/// has magnitude >= kStorageEpsilon. The element is Hermitian exactly when all
/// stored coefficients are real (the basis matrices are Hermitian).
class Observable {
 public:
  Observable() = default;
  explicit Observable(int sites);

  /// Takes ownership of a raw coefficient map and canonicalizes it once.
  static Observable from_terms(int sites, std::map<PauliIndex, Complex> terms);

  int sites() const { return sites_; }
  const std::map<PauliIndex, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Complex coeff(const PauliIndex& s) const;
  void set_coeff(const PauliIndex& s, Complex c);
  void add_coeff(const PauliIndex& s, Complex c);

  bool operator==(const Observable& other) const = default;

 private:
  int sites_ = 0;
  std::map<PauliIndex, Complex> terms_;
};

Observable zero_observable(int sites);
Observable identity_observable(int sites);
Observable pauli_observable(const PauliIndex& s, Complex c = Complex{1.0, 0.0});

Observable add(const Observable& a, const Observable& b);
Observable subtract(const Observable& a, const Observable& b);
Observable scale(const Observable& a, Complex c);
Observable adjoint(const Observable& a);

/// Term-wise product with phase bookkeeping via the single-site table.
/// Validated against dense multiplication in tests.
Observable multiply(const Observable& a, const Observable& b);

/// Sum of conj(a_hat(s)) * b_hat(s); equals the normalized trace of a* b.
Complex inner_product(const Observable& a, const Observable& b);

/// Normalized trace, i.e. the coefficient at the all-zero index.
Complex trace(const Observable& a);

/// Max support size over stored terms; 0 for the zero element.
int degree(const Observable& a);

/// Sum of |coefficient|^2 == squared L2 norm (Parseval).
double norm2_squared(const Observable& a);

/// Squared L2 distance in coefficient space.
double distance2_squared(const Observable& a, const Observable& b);

/// Largest |coefficient| of a - b; 0 for equal elements.
double max_coeff_deviation(const Observable& a, const Observable& b);

bool has_real_coeffs(const Observable& a, double tol = 1e-12);

inline Observable operator+(const Observable& a, const Observable& b) { return add(a, b); }
inline Observable operator-(const Observable& a, const Observable& b) { return subtract(a, b); }
inline Observable operator*(Complex c, const Observable& a) { return scale(a, c); }
inline Observable operator*(double c, const Observable& a) { return scale(a, Complex{c, 0.0}); }
inline Observable operator*(const Observable& a, const Observable& b) { return multiply(a, b); }
inline Observable operator-(const Observable& a) { return scale(a, Complex{-1.0, 0.0}); }

}  // namespace qhc

#endif
