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

#ifndef QHC_PAULI_HPP
#define QHC_PAULI_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qhc {

using Complex = std::complex<double>;

/// A basis word: one digit in {0,1,2,3} per site. Digit 0 is the identity
/// site; sites are 0-based throughout the library.
using PauliIndex = std::vector<std::uint8_t>;

/// Dense matrices beyond this many sites are refused.
inline constexpr int kMaxDenseSites = 12;

std::vector<int> support(const PauliIndex& s);
int support_size(const PauliIndex& s);

/// s with digit at `site` set to alpha. Requires s[site] == 0 and
/// alpha in {1,2,3}; anything else throws std::invalid_argument.
PauliIndex index_insert(const PauliIndex& s, int site, std::uint8_t alpha);

/// Result of a single-site basis product: sigma_a * sigma_b = i^phase_power * sigma_digit.
struct SiteProduct {
  std::uint8_t phase_power;  // exponent of i, in {0,1,2,3}
  std::uint8_t digit;
};

/// Frozen 4x4 product table for the single-site basis matrices. The table is
/// regenerated from the 2x2 matrices by generate_single_site_table() and the
/// two must agree (checked in tests and by `qhc selftest`).
SiteProduct single_site_product(std::uint8_t a, std::uint8_t b);

Complex phase_value(std::uint8_t phase_power);

/// The 2x2 basis matrix for one digit, row-major. Note the digit-3 matrix is
/// [[0, i], [-i, 0]]; all four are Hermitian involutions.
std::array<Complex, 4> site_matrix(std::uint8_t digit);

/// Rebuilds the product table by direct 2x2 multiplication.
std::array<std::array<SiteProduct, 4>, 4> generate_single_site_table();

}  // namespace qhc

#endif
