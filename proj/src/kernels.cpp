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

#include "qhc/kernels.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qhc::kernels {

namespace {

struct TermView {
  const PauliIndex* s;
  Complex c;
};

std::vector<TermView> term_views(const Observable& obs) {
  std::vector<TermView> out;
  out.reserve(obs.term_count());
  for (const auto& [s, c] : obs.terms()) out.push_back({&s, c});
  return out;
}

void require_dense_sites(int sites, const char* what) {
  if (sites < 0 || sites > kMaxDenseSites) {
    throw std::invalid_argument(std::string(what) + ": site count " + std::to_string(sites) +
                                " outside dense range [0," + std::to_string(kMaxDenseSites) + "]");
  }
}

}  // namespace

RowEntry pauli_row_entry(const PauliIndex& s, std::int64_t row) {
  const int n = static_cast<int>(s.size());
  std::int64_t col = row;
  Complex val{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const int bit = static_cast<int>((row >> (n - 1 - j)) & 1);
    switch (s[j]) {
      case 0:
        break;
      case 1:
        if (bit) val = -val;
        break;
      case 2:
        col ^= (std::int64_t{1} << (n - 1 - j));
        break;
      case 3:
        col ^= (std::int64_t{1} << (n - 1 - j));
        val *= bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        break;
      default:
        throw std::invalid_argument("pauli_row_entry: digit out of {0,1,2,3}");
    }
  }
  return RowEntry{col, val};
}

std::uint64_t encode_index(const PauliIndex& s) {
  std::uint64_t code = 0;
  for (auto d : s) code = (code << 2) | d;
  return code;
}

PauliIndex decode_index(std::uint64_t code, int sites) {
  PauliIndex s(sites, 0);
  for (int j = sites - 1; j >= 0; --j) {
    s[j] = static_cast<std::uint8_t>(code & 3u);
    code >>= 2;
  }
  return s;
}

namespace {

void synthesize_row(const std::vector<TermView>& terms, std::int64_t row, Eigen::MatrixXcd& out) {
  for (const auto& t : terms) {
    const RowEntry e = pauli_row_entry(*t.s, row);
    out(row, e.col) += t.c * e.val;
  }
}

}  // namespace

Eigen::MatrixXcd synthesize_serial(const Observable& obs) {
  require_dense_sites(obs.sites(), "synthesize");
  const std::int64_t dim = std::int64_t{1} << obs.sites();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const auto terms = term_views(obs);
  for (std::int64_t row = 0; row < dim; ++row) synthesize_row(terms, row, out);
  return out;
}

Eigen::MatrixXcd synthesize_parallel(const Observable& obs) {
  require_dense_sites(obs.sites(), "synthesize");
  const std::int64_t dim = std::int64_t{1} << obs.sites();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const auto terms = term_views(obs);
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < dim; ++row) synthesize_row(terms, row, out);
  return out;
}

namespace {

Complex coefficient_at(const Eigen::MatrixXcd& mat, int n, std::uint64_t code) {
  // tr_n(sigma_s^* T) accumulated over the single nonzero of sigma_s per row.
  const std::int64_t dim = std::int64_t{1} << n;
  const PauliIndex s = decode_index(code, n);
  Complex acc{0.0, 0.0};
  for (std::int64_t row = 0; row < dim; ++row) {
    const RowEntry e = pauli_row_entry(s, row);
    acc += std::conj(e.val) * mat(row, e.col);
  }
  return acc / static_cast<double>(dim);
}

}  // namespace

Observable analyze_serial(const Eigen::MatrixXcd& mat, int sites, double drop_epsilon) {
  require_dense_sites(sites, "analyze");
  const std::int64_t dim = std::int64_t{1} << sites;
  if (mat.rows() != dim || mat.cols() != dim) {
    throw std::invalid_argument("analyze: matrix dimension does not match site count");
  }
  const std::uint64_t total = std::uint64_t{1} << (2 * sites);
  std::map<PauliIndex, Complex> terms;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Complex c = coefficient_at(mat, sites, code);
    if (std::abs(c) >= drop_epsilon) terms.emplace_hint(terms.end(), decode_index(code, sites), c);
  }
  return Observable::from_terms(sites, std::move(terms));
}

Observable analyze_parallel(const Eigen::MatrixXcd& mat, int sites, double drop_epsilon) {
  require_dense_sites(sites, "analyze");
  const std::int64_t dim = std::int64_t{1} << sites;
  if (mat.rows() != dim || mat.cols() != dim) {
    throw std::invalid_argument("analyze: matrix dimension does not match site count");
  }
  const std::uint64_t total = std::uint64_t{1} << (2 * sites);
  // Chunked so the scratch buffer stays small at n = 12.
  const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << 16);
  std::vector<Complex> buffer(chunk);
  std::map<PauliIndex, Complex> terms;
  for (std::uint64_t base = 0; base < total; base += chunk) {
    const std::int64_t len = static_cast<std::int64_t>(std::min(chunk, total - base));
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < len; ++k) {
      buffer[k] = coefficient_at(mat, sites, base + static_cast<std::uint64_t>(k));
    }
    for (std::int64_t k = 0; k < len; ++k) {
      if (std::abs(buffer[k]) >= drop_epsilon) {
        terms.emplace_hint(terms.end(), decode_index(base + k, sites), buffer[k]);
      }
    }
  }
  return Observable::from_terms(sites, std::move(terms));
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double parallel_pairwise_sum(std::int64_t count, const std::function<double(std::int64_t)>& f) {
  std::vector<double> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) values[i] = f(i);
  return pairwise_sum(values);
}

}  // namespace qhc::kernels
