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

#include "qhc/pauli.hpp"
#include "test_util.hpp"

using namespace qhc;
using testutil::idx;

TEST_CASE("support and support_size") {
  CHECK(support(idx({0, 0, 0})).empty());
  CHECK(support_size(idx({0, 0, 0})) == 0);
  CHECK(support(idx({1, 0, 2})) == std::vector<int>{0, 2});
  CHECK(support_size(idx({1, 0, 2})) == 2);
  CHECK(support_size(idx({3, 3, 3, 3})) == 4);
}

TEST_CASE("index_insert respects the zero-digit contract") {
  CHECK(index_insert(idx({0, 0}), 0, 2) == idx({2, 0}));
  CHECK(index_insert(idx({0, 3}), 0, 1) == idx({1, 3}));
  CHECK_THROWS_AS(index_insert(idx({1, 0}), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(index_insert(idx({0, 0}), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(index_insert(idx({0, 0}), 0, 0), std::invalid_argument);
}

TEST_CASE("frozen product table matches direct 2x2 multiplication") {
  const auto generated = generate_single_site_table();
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::uint8_t b = 0; b < 4; ++b) {
      const SiteProduct frozen = single_site_product(a, b);
      CHECK(frozen.phase_power == generated[a][b].phase_power);
      CHECK(frozen.digit == generated[a][b].digit);
    }
  }
}

TEST_CASE("identity element and involutions") {
  for (std::uint8_t k = 0; k < 4; ++k) {
    const SiteProduct left = single_site_product(0, k);
    CHECK(left.phase_power == 0);
    CHECK(left.digit == k);
    const SiteProduct square = single_site_product(k, k);
    CHECK(square.phase_power == 0);
    CHECK(square.digit == 0);
  }
}

TEST_CASE("product of distinct nonzero digits lands on the third with phase +-i") {
  const SiteProduct p12 = single_site_product(1, 2);
  CHECK(p12.digit == 3);
  CHECK((p12.phase_power == 1 || p12.phase_power == 3));
  // Sign fixed by the digit-3 matrix convention: sigma_1 sigma_2 = -i sigma_3.
  CHECK(p12.phase_power == 3);
}

TEST_CASE("table is associative and commutes up to sign on all pairs") {
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::uint8_t b = 0; b < 4; ++b) {
      const SiteProduct ab = single_site_product(a, b);
      const SiteProduct ba = single_site_product(b, a);
      CHECK(ab.digit == ba.digit);
      CHECK((ab.phase_power - ba.phase_power) % 2 == 0);  // differ by a sign only
      for (std::uint8_t c = 0; c < 4; ++c) {
        const SiteProduct bc = single_site_product(b, c);
        const SiteProduct ab_c = single_site_product(ab.digit, c);
        const SiteProduct a_bc = single_site_product(a, bc.digit);
        CHECK(ab_c.digit == a_bc.digit);
        CHECK(((ab.phase_power + ab_c.phase_power) & 3) ==
              ((bc.phase_power + a_bc.phase_power) & 3));
      }
    }
  }
}
