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

#include <algorithm>

#include "qhc/dense.hpp"
#include "qhc/scaffold.hpp"
#include "test_util.hpp"

using namespace qhc;
using testutil::idx;

TEST_CASE("lift and move_to_last unit cases") {
  CHECK(lift(pauli_observable(idx({1, 2}))).obs == pauli_observable(idx({1, 2, 0})));
  CHECK(move_to_last(pauli_observable(idx({1, 2})), 0).obs == pauli_observable(idx({0, 2, 1})));
  CHECK(move_to_last(pauli_observable(idx({1, 2})), 1).obs == pauli_observable(idx({1, 0, 2})));
}

TEST_CASE("move_to_last preserves all L_p norms") {
  Rng rng(71);
  const Observable t = testutil::random_hermitian(3, 10, rng);
  for (int j = 0; j < 3; ++j) {
    const Observable moved = move_to_last(t, j).obs;
    for (double p : {1.0, 2.0, kPInf}) {
      CHECK(schatten_norm(synthesize(moved), p) ==
            doctest::Approx(schatten_norm(synthesize(t), p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("build_aj") {
  const Observable aj = build_aj(1, 0).obs;
  Observable expect(2);
  expect.set_coeff(idx({1, 0}), Complex{1.0, 0.0});
  expect.set_coeff(idx({2, 0}), Complex{1.0, 0.0});
  expect.set_coeff(idx({3, 0}), Complex{1.0, 0.0});
  CHECK(aj == expect);
  CHECK_THROWS_AS(build_aj(2, 2), std::invalid_argument);
}

TEST_CASE("build_tj squared norm collects the marked coefficients") {
  Rng rng(72);
  const Observable t = testutil::random_hermitian(4, 20, rng);
  const SiteSubset j_set = SiteSubset::of(4, {0, 1});
  const int j = 0;
  for (int d = 1; d <= 3; ++d) {
    const Observable tj = build_tj(t, j_set, j, d).obs;
    double expect = 0.0;
    for (const auto& [s, c] : t.terms()) {
      if (s[j] == 0 || support_size(s) != d) continue;
      bool ok = true;
      for (int site = 0; site < 4; ++site) {
        if (site != j && s[site] != 0 && j_set.contains(site)) ok = false;
      }
      if (ok) expect += std::norm(c);
    }
    CHECK(norm2_squared(tj) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("tcopy splits, ttilde duplicates") {
  Observable t(2);
  t.set_coeff(idx({0, 1}), Complex{0.5, 0.0});
  t.set_coeff(idx({2, 1}), Complex{0.25, 0.0});
  const Observable tcopy = build_tcopy(t, 0).obs;
  CHECK(tcopy.coeff(idx({0, 1, 0})) == Complex{0.5, 0.0});
  CHECK(tcopy.coeff(idx({0, 1, 2})) == Complex{0.25, 0.0});
  const Observable ttilde = build_ttilde(t, 0).obs;
  CHECK(ttilde.coeff(idx({0, 1, 0})) == Complex{0.5, 0.0});
  CHECK(ttilde.coeff(idx({2, 1, 2})) == Complex{0.25, 0.0});
}

TEST_CASE("lem cJc identity holds coefficient-exactly") {
  Rng rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const Observable t = testutil::random_hermitian(n, 14, rng);
    const std::uint32_t full = (1u << n) - 1u;
    const std::uint32_t mask = static_cast<std::uint32_t>(rng.below(full)) + 1u;
    const SiteSubset j_set = SiteSubset::from_mask(n, mask);
    const auto members = j_set.members();
    const int j = members[rng.below(members.size())];

    // Lifted complement J^c + {n} (the appended site index is n, 0-based).
    SiteSubset lifted_keep = SiteSubset::empty(n + 1);
    for (int site = 0; site < n; ++site) {
      if (!j_set.contains(site)) lifted_keep.mask |= (1u << site);
    }
    lifted_keep.mask |= (1u << n);

    const Observable left = conditional_expectation(
        multiply(build_aj(n, j).obs, build_ttilde(t, j).obs), lifted_keep);
    const Observable right = conditional_expectation(
        partial_derivative(build_tcopy(t, j).obs, n), lifted_keep);
    CHECK(max_coeff_deviation(left, right) <= 1e-9);
  }
}

TEST_CASE("key identity: the moved derivative keeps its L1 norm") {
  Rng rng(75);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const Observable t = testutil::random_hermitian(n, 12, rng);
    const int j = static_cast<int>(rng.below(n));
    const Observable moved = partial_derivative(build_tcopy(t, j).obs, n);
    const Observable direct = partial_derivative(t, j);
    const double lhs = moved.is_zero() ? 0.0 : schatten_norm(synthesize(moved), 1.0);
    const double rhs = direct.is_zero() ? 0.0 : schatten_norm(synthesize(direct), 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("lem Tj 1: squared mass equals the squared pairing trace") {
  Rng rng(76);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const Observable t = testutil::random_hermitian(n, 16, rng);
    const std::uint32_t full = (1u << n) - 1u;
    const SiteSubset j_set =
        SiteSubset::from_mask(n, static_cast<std::uint32_t>(rng.below(full)) + 1u);
    const auto members = j_set.members();
    const int j = members[rng.below(members.size())];
    const int d = 1 + static_cast<int>(rng.below(3));

    const Observable tj = build_tj(t, j_set, j, d).obs;
    const double mass = norm2_squared(tj);
    if (mass < 1e-12) continue;  // normalization undefined; skipped by design
    ++checked;
    const Observable tbar = scale(tj, Complex{1.0 / std::sqrt(mass), 0.0});
    const Observable product = multiply(tbar, multiply(build_aj(n, j).obs, build_ttilde(t, j).obs));
    const Complex pairing = trace(product);
    CHECK(std::abs(pairing.imag()) <= 1e-9);
    CHECK(pairing.real() * pairing.real() == doctest::Approx(mass).epsilon(1e-9));
  }
  CHECK(checked >= 20);
}

TEST_CASE("Y1j layercake bound via exact piecewise integration") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Observable t = testutil::random_hermitian(n, 12, rng);
    const std::uint32_t full = (1u << n) - 1u;
    const SiteSubset j_set =
        SiteSubset::from_mask(n, static_cast<std::uint32_t>(rng.below(full)) + 1u);
    const auto members = j_set.members();
    const int j = members[rng.below(members.size())];
    const int d = 1 + static_cast<int>(rng.below(2));

    const Observable tj = build_tj(t, j_set, j, d).obs;
    const double mass = norm2_squared(tj);
    if (mass < 1e-12) continue;
    const Observable tbar = scale(tj, Complex{1.0 / std::sqrt(mass), 0.0});

    SiteSubset lifted_keep = SiteSubset::empty(n + 1);
    for (int site = 0; site < n; ++site) {
      if (!j_set.contains(site)) lifted_keep.mask |= (1u << site);
    }
    lifted_keep.mask |= (1u << n);
    const Observable expected = conditional_expectation(
        multiply(build_aj(n, j).obs, build_ttilde(t, j).obs), lifted_keep);

    const DenseOperator abs_tbar = abs_op(synthesize(tbar));
    const DenseOperator abs_expected = abs_op(synthesize(expected));
    const Eigen::VectorXd eigs = eigenvalues(abs_tbar);

    for (double t0 : {0.5, 1.0, 2.0}) {
      // Piecewise-constant integration of tr[1_(t,inf)(|Tbar|) |E(...)|] on [0, t0].
      std::vector<double> cuts{0.0, t0};
      for (std::int64_t i = 0; i < eigs.size(); ++i) {
        if (eigs[i] > 0.0 && eigs[i] < t0) cuts.push_back(eigs[i]);
      }
      std::sort(cuts.begin(), cuts.end());
      double integral = 0.0;
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        const DenseOperator indicator = spectral_indicator(abs_tbar, mid, kPInf, false, false);
        const double level =
            (indicator.mat * abs_expected.mat).trace().real() / static_cast<double>(1 << (n + 1));
        integral += (cuts[k + 1] - cuts[k]) * level;
      }
      const Observable dj = partial_derivative(t, j);
      const double rhs =
          t0 * (dj.is_zero() ? 0.0 : schatten_norm(synthesize(dj), 1.0));
      CHECK(integral <= rhs + 1e-9);
    }
  }
}
