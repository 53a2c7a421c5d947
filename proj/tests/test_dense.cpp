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
#include "qhc/hypercube.hpp"
#include "test_util.hpp"

using namespace qhc;
using testutil::idx;

namespace {

Observable subcube_projection(int n, int k) {
  Observable out(n);
  for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
    PauliIndex s(n, 0);
    for (int j = 0; j < k; ++j) {
      if ((subset >> j) & 1u) s[j] = 1;
    }
    out.set_coeff(s, Complex{std::pow(0.5, k), 0.0});
  }
  return out;
}

}  // namespace

TEST_CASE("synthesize unit cases") {
  const DenseOperator one = synthesize(identity_observable(2));
  CHECK((one.mat - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  const Observable back = analyze(dense_identity(2));
  CHECK(back == identity_observable(2));
}

TEST_CASE("analyze(synthesize) round trip on random elements") {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Observable t = testutil::random_complex(n, 3 + static_cast<int>(rng.below(20)), rng);
    CHECK(max_coeff_deviation(analyze(synthesize(t)), t) <= 1e-10);
  }
}

TEST_CASE("schatten norms of basis words and small projections") {
  for (double p : {1.0, 1.5, 2.0, 3.0, kPInf}) {
    CHECK(schatten_norm(synthesize(pauli_observable(idx({1, 2, 3}))), p) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // (1 + sigma_1)/2 on one site: eigenvalues {1, 0}.
  Observable half(1);
  half.set_coeff(idx({0}), Complex{0.5, 0.0});
  half.set_coeff(idx({1}), Complex{0.5, 0.0});
  CHECK(schatten_norm(synthesize(half), 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(schatten_norm(synthesize(half), kPInf) == doctest::Approx(1.0).epsilon(1e-12));
  // Subcube k = 2 in n = 2: a rank-one projection, normalized L1 = 1/4.
  CHECK(schatten_norm(synthesize(subcube_projection(2, 2)), 1.0) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("schatten_norm rejects p < 1") {
  CHECK_THROWS_AS(schatten_norm(dense_identity(1), 0.5), std::invalid_argument);
}

TEST_CASE("normalized norms are monotone in p") {
  Rng rng(22);
  const Observable t = testutil::random_hermitian(4, 12, rng);
  const DenseOperator m = synthesize(t);
  double prev = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0, 8.0, kPInf}) {
    const double value = schatten_norm(m, p);
    CHECK(value >= prev - 1e-12);
    prev = value;
  }
}

TEST_CASE("variance") {
  CHECK(variance(dense_identity(3)) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(variance(synthesize(pauli_observable(idx({2, 0})))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Balanced projection: var = 1/4.
  CHECK(variance(synthesize(subcube_projection(2, 1)))
        == doctest::Approx(0.25).epsilon(1e-12));
  // Matches the coefficient-space variance and the centered L2 norm.
  Rng rng(23);
  const Observable t = testutil::random_hermitian(3, 10, rng);
  const DenseOperator m = synthesize(t);
  CHECK(variance(m) == doctest::Approx(variance_coeff(t)).epsilon(1e-10));
  const Observable centered = t - trace(t) * identity_observable(3);
  CHECK(variance(m) ==
        doctest::Approx(std::pow(schatten_norm(synthesize(centered), 2.0), 2)).epsilon(1e-10));
}

TEST_CASE("spectral indicator selects eigenspaces and is idempotent") {
  Rng rng_all(24);
  const DenseOperator everything = spectral_indicator(
      synthesize(testutil::random_hermitian(3, 8, rng_all)), -kPInf, kPInf, true, true);
  CHECK((everything.mat - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-9);

  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(1, 1) = 1.0;
  const DenseOperator m{1, diag};
  const DenseOperator picked = spectral_indicator(m, 0.5, kPInf);
  CHECK((picked.mat - diag).cwiseAbs().maxCoeff() <= 1e-12);

  Rng rng(25);
  const DenseOperator random_m = synthesize(testutil::random_hermitian(3, 14, rng));
  const DenseOperator proj = spectral_indicator(random_m, 0.0, kPInf);
  CHECK((proj.mat * proj.mat - proj.mat).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(is_hermitian(proj, 1e-9));
}

TEST_CASE("Paley-Zygmund on a rank-one subcube projection") {
  const Observable t = subcube_projection(2, 2);
  const DenseOperator m = synthesize(t);
  const double l1 = schatten_norm(m, 1.0);
  const double mass = spectral_indicator_trace(m, 0.5 * l1, kPInf, true, false);
  CHECK(mass == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mass >= 0.25 * l1 * l1 / std::pow(schatten_norm(m, 2.0), 2) - 1e-12);
}

TEST_CASE("functional calculus, sqrt, and psd margin") {
  Rng rng(26);
  const DenseOperator m = synthesize(testutil::random_hermitian(3, 10, rng));
  const DenseOperator same = functional_calculus(m, [](double x) { return x; });
  CHECK((same.mat - m.mat).cwiseAbs().maxCoeff() <= 1e-10);

  const DenseOperator proj = spectral_indicator(m, 0.0, kPInf);
  const DenseOperator root = matrix_sqrt(proj);
  // Square roots amplify zero-eigenvalue noise to sqrt(eps) ~ 1e-8.
  CHECK((root.mat - proj.mat).cwiseAbs().maxCoeff() <= 1e-7);

  CHECK(psd_margin(synthesize(pauli_observable(idx({1})))) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(matrix_sqrt(synthesize(pauli_observable(idx({1})))), std::domain_error);
}

TEST_CASE("layercake trace equals the direct trace") {
  Rng rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const Observable s_obs = testutil::random_hermitian(n, 8, rng);
    const Observable t_obs = testutil::random_hermitian(n, 8, rng);
    const DenseOperator s = synthesize(s_obs);
    DenseOperator t = synthesize(t_obs);
    // Shift to PSD.
    const double margin = psd_margin(t);
    t.mat -= (margin - 0.25) * Eigen::MatrixXcd::Identity(t.dim(), t.dim());
    const double direct = (s.mat * t.mat).trace().real() / static_cast<double>(t.dim());
    CHECK(layercake_trace(s, t) == doctest::Approx(direct).epsilon(1e-9));
  }
  // T = identity: integral is tr(S).
  Rng rng2(28);
  const DenseOperator s = synthesize(testutil::random_hermitian(2, 6, rng2));
  CHECK(layercake_trace(s, dense_identity(2)) ==
        doctest::Approx(dense_trace(s).real()).epsilon(1e-12));
}

TEST_CASE("layercake rejects non-PSD second factor") {
  CHECK_THROWS_AS(layercake_trace(dense_identity(1), synthesize(pauli_observable(idx({1})))),
                  std::domain_error);
}
