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

#include "qhc/pauli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhc {

std::vector<int> support(const PauliIndex& s) {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    if (s[j] != 0) out.push_back(j);
  }
  return out;
}

int support_size(const PauliIndex& s) {
  int count = 0;
  for (auto d : s) {
    if (d != 0) ++count;
  }
  return count;
}

PauliIndex index_insert(const PauliIndex& s, int site, std::uint8_t alpha) {
  if (site < 0 || site >= static_cast<int>(s.size())) {
    throw std::invalid_argument("index_insert: site " + std::to_string(site) +
                                " out of range for n=" + std::to_string(s.size()));
  }
  if (alpha < 1 || alpha > 3) {
    throw std::invalid_argument("index_insert: alpha must be in {1,2,3}");
  }
  if (s[site] != 0) {
    throw std::invalid_argument("index_insert: digit at site " + std::to_string(site) +
                                " is already nonzero");
  }
  PauliIndex out = s;
  out[site] = alpha;
  return out;
}

Complex phase_value(std::uint8_t phase_power) {
  switch (phase_power & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::array<Complex, 4> site_matrix(std::uint8_t digit) {
  const Complex i{0.0, 1.0};
  switch (digit) {
    case 0: return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
    case 1: return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
    case 2: return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    case 3: return {Complex{0, 0}, i, -i, Complex{0, 0}};
    default: throw std::invalid_argument("site_matrix: digit must be in {0,1,2,3}");
  }
}

namespace {

// Frozen table, entries {phase_power, digit}. Generated once from the 2x2
// matrices above; generate_single_site_table() must reproduce it exactly.
constexpr SiteProduct kProductTable[4][4] = {
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
    {{0, 1}, {0, 0}, {3, 3}, {1, 2}},
    {{0, 2}, {1, 3}, {0, 0}, {3, 1}},
    {{0, 3}, {3, 2}, {1, 1}, {0, 0}},
};

}  // namespace

SiteProduct single_site_product(std::uint8_t a, std::uint8_t b) {
  if (a > 3 || b > 3) {
    throw std::invalid_argument("single_site_product: digits must be in {0,1,2,3}");
  }
  return kProductTable[a][b];
}

std::array<std::array<SiteProduct, 4>, 4> generate_single_site_table() {
  std::array<std::array<SiteProduct, 4>, 4> table{};
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::uint8_t b = 0; b < 4; ++b) {
      const auto ma = site_matrix(a);
      const auto mb = site_matrix(b);
      // prod = ma * mb, row-major 2x2.
      std::array<Complex, 4> prod{};
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          prod[2 * r + c] = ma[2 * r + 0] * mb[0 + c] + ma[2 * r + 1] * mb[2 + c];
        }
      }
      bool matched = false;
      for (std::uint8_t d = 0; d < 4 && !matched; ++d) {
        const auto md = site_matrix(d);
        for (std::uint8_t p = 0; p < 4 && !matched; ++p) {
          const Complex phase = phase_value(p);
          double err = 0.0;
          for (int k = 0; k < 4; ++k) err += std::abs(prod[k] - phase * md[k]);
          if (err < 1e-12) {
            table[a][b] = SiteProduct{p, d};
            matched = true;
          }
        }
      }
      if (!matched) {
        throw std::logic_error("generate_single_site_table: product is not a phased basis matrix");
      }
    }
  }
  return table;
}

}  // namespace qhc
