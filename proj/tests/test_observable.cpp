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

#include "qhc/dense.hpp"
#include "qhc/observable.hpp"
#include "test_util.hpp"

using namespace qhc;
using testutil::idx;

TEST_CASE("canonical form drops tiny coefficients") {
  Observable t(2);
  t.set_coeff(idx({1, 0}), Complex{1e-15, 0.0});
  CHECK(t.is_zero());
  t.set_coeff(idx({1, 0}), Complex{0.5, 0.0});
  t.add_coeff(idx({1, 0}), Complex{-0.5, 0.0});
  CHECK(t.is_zero());
}

TEST_CASE("trace and degree") {
  Observable t(2);
  t.set_coeff(idx({0, 0}), Complex{0.5, 0.0});
  t.set_coeff(idx({1, 1}), Complex{0.25, 0.0});
  CHECK(trace(t) == Complex{0.5, 0.0});
  CHECK(degree(t) == 2);
  CHECK(degree(zero_observable(3)) == 0);
  CHECK(trace(pauli_observable(idx({1, 2}))) == Complex{0.0, 0.0});
}

TEST_CASE("adjoint conjugates coefficients and fixes Hermitian elements") {
  Rng rng(3);
  const Observable h = testutil::random_hermitian(3, 8, rng);
  CHECK(adjoint(h) == h);
  const Observable c = testutil::random_complex(3, 8, rng);
  CHECK(adjoint(adjoint(c)) == c);
}

TEST_CASE("Parseval: inner product equals the squared dense L2 norm") {
  Rng rng(5);
  const Observable t = testutil::random_complex(3, 10, rng);
  const double from_coeffs = inner_product(t, t).real();
  const double from_dense = std::pow(schatten_norm(synthesize(t), 2.0), 2);
  CHECK(std::abs(from_coeffs - from_dense) <= 1e-10);
  CHECK(std::abs(from_coeffs - norm2_squared(t)) <= 1e-14);
}

TEST_CASE("multiply: unit examples") {
  const Observable one = identity_observable(2);
  const Observable sx = pauli_observable(idx({1, 0}));
  CHECK(multiply(one, sx) == sx);
  CHECK(multiply(sx, sx) == one);
  CHECK(multiply(pauli_observable(idx({1, 0})), pauli_observable(idx({0, 1}))) ==
        pauli_observable(idx({1, 1})));
}

TEST_CASE("multiply agrees with dense multiplication on random pairs") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Observable a = testutil::random_complex(n, 6, rng);
    const Observable b = testutil::random_complex(n, 6, rng);
    const Eigen::MatrixXcd direct = synthesize(a).mat * synthesize(b).mat;
    const Eigen::MatrixXcd via_terms = synthesize(multiply(a, b)).mat;
    CHECK((via_terms - direct).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("site count mismatches are rejected") {
  CHECK_THROWS_AS(add(zero_observable(2), zero_observable(3)), std::invalid_argument);
  CHECK_THROWS_AS(multiply(zero_observable(2), zero_observable(3)), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(zero_observable(2), zero_observable(3)), std::invalid_argument);
}
