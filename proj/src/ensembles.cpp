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

#include "qhc/ensembles.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qhc/dense.hpp"
#include "qhc/hypercube.hpp"
#include "qhc/kernels.hpp"
#include "qhc/rng.hpp"

namespace qhc {

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, double>& params, const std::string& key, int fallback) {
  return static_cast<int>(std::llround(param_or(params, key, fallback)));
}

Eigen::MatrixXcd ginibre(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd out(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      out(r, c) = Complex{rng.normal(), rng.normal()};
    }
  }
  return out;
}

// Haar-distributed isometry: QR of a Ginibre matrix with the R diagonal made
// positive real.
Eigen::MatrixXcd haar_isometry(int dim, int rank, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rank, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, rank);
  const Eigen::MatrixXcd r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
  for (int c = 0; c < rank; ++c) {
    const Complex d = r(c, c);
    const double mag = std::abs(d);
    if (mag > 0) q.col(c) *= std::conj(d) / mag;
  }
  return q;
}

Observable make_pauli_string(const EnsembleSpec& spec, Rng& rng) {
  PauliIndex s;
  if (!spec.digits.empty()) {
    if (static_cast<int>(spec.digits.size()) != spec.n) {
      throw std::invalid_argument("pauli_string: digit list length must equal n");
    }
    s = spec.digits;
  } else {
    s.assign(spec.n, 0);
    do {
      for (int j = 0; j < spec.n; ++j) s[j] = static_cast<std::uint8_t>(rng.below(4));
    } while (support_size(s) == 0);
  }
  return pauli_observable(s);
}

Observable make_subcube(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("subcube: need 1 <= k <= n");
  // prod_{j<k} (1 + sigma_1^(j))/2 expands to 2^-k per subset of the first k sites.
  Observable out(n);
  const double c = std::pow(0.5, k);
  for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
    PauliIndex s(n, 0);
    for (int j = 0; j < k; ++j) {
      if ((subset >> j) & 1u) s[j] = 1;
    }
    out.set_coeff(s, Complex{c, 0.0});
  }
  return out;
}

Observable make_random_projection(int n, int rank, Rng& rng) {
  const std::int64_t dim = std::int64_t{1} << n;
  if (rank < 1 || rank > dim) throw std::invalid_argument("random_projection: bad rank");
  const Eigen::MatrixXcd q = haar_isometry(static_cast<int>(dim), rank, rng);
  Eigen::MatrixXcd p = q * q.adjoint();
  return analyze(DenseOperator{n, std::move(p)});
}

Observable make_random_contraction(int n, Rng& rng) {
  const std::int64_t dim = std::int64_t{1} << n;
  const Eigen::MatrixXcd g = ginibre(static_cast<int>(dim), static_cast<int>(dim), rng);
  Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (hi - lo < 1e-12) return scale(identity_observable(n), Complex{0.5, 0.0});
  Eigen::MatrixXcd t = (h - lo * Eigen::MatrixXcd::Identity(dim, dim)) / (hi - lo);
  return analyze(DenseOperator{n, std::move(t)});
}

Observable make_random_low_degree(int n, int d, Rng& rng) {
  if (d < 0 || d > n) throw std::invalid_argument("random_low_degree: need 0 <= d <= n");
  Observable out(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const PauliIndex s = kernels::decode_index(code, n);
    if (support_size(s) > d) continue;
    out.set_coeff(s, Complex{rng.normal(), 0.0});
  }
  const double norm = std::sqrt(norm2_squared(out));
  if (norm < 1e-12) return out;
  return scale(out, Complex{1.0 / norm, 0.0});
}

Observable make_remark_p2(int n) {
  Observable out(n);
  out.set_coeff(PauliIndex(n, 0), Complex{0.5, 0.0});
  for (int j = 0; j < n; ++j) {
    PauliIndex s(n, 0);
    s[j] = 1;
    out.set_coeff(s, Complex{0.5 / n, 0.0});
  }
  return out;
}

}  // namespace

std::vector<double> walsh_coefficients(int n, const std::function<double(std::uint32_t)>& f) {
  const std::uint32_t points = 1u << n;
  std::vector<double> values(points);
  for (std::uint32_t x = 0; x < points; ++x) values[x] = f(x);
  // In-place Walsh-Hadamard transform.
  for (std::uint32_t len = 1; len < points; len <<= 1) {
    for (std::uint32_t base = 0; base < points; base += (len << 1)) {
      for (std::uint32_t k = 0; k < len; ++k) {
        const double a = values[base + k];
        const double b = values[base + k + len];
        values[base + k] = a + b;
        values[base + k + len] = a - b;
      }
    }
  }
  for (auto& v : values) v /= static_cast<double>(points);
  return values;
}

Observable embed_classical(int n, const std::vector<double>& walsh) {
  if (walsh.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("embed_classical: coefficient count must be 2^n");
  }
  Observable out(n);
  for (std::uint32_t subset = 0; subset < walsh.size(); ++subset) {
    if (std::abs(walsh[subset]) < kStorageEpsilon) continue;
    PauliIndex s(n, 0);
    for (int j = 0; j < n; ++j) {
      if ((subset >> j) & 1u) s[j] = 1;
    }
    out.set_coeff(s, Complex{walsh[subset], 0.0});
  }
  return out;
}

double classical_value(const std::string& name, int n, const std::map<std::string, double>& params,
                       std::uint32_t point) {
  // Bit j of `point` set means x_j = -1.
  auto x = [&](int j) { return ((point >> j) & 1u) ? -1.0 : 1.0; };
  if (name == "dictator") return x(0);
  if (name == "parity") {
    const int k = int_param(params, "k", n);
    if (k < 1 || k > n) throw std::invalid_argument("classical parity: bad k");
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= x(j);
    return v;
  }
  if (name == "majority") {
    if (n % 2 == 0) throw std::invalid_argument("classical majority: n must be odd");
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += x(j);
    return sum > 0 ? 1.0 : -1.0;
  }
  if (name == "tribes") {
    const int w = int_param(params, "w", 2);
    if (w < 1) throw std::invalid_argument("classical tribes: bad width");
    for (int base = 0; base < n; base += w) {
      bool all_true = true;
      for (int j = base; j < std::min(n, base + w); ++j) {
        if (x(j) < 0) {
          all_true = false;
          break;
        }
      }
      if (all_true) return 1.0;
    }
    return -1.0;
  }
  throw std::invalid_argument("classical: unknown function name '" + name + "'");
}

std::string EnsembleSpec::describe() const {
  std::ostringstream out;
  out << kind << "(n=" << n;
  if (kind == "classical") out << ",f=" << classical_name;
  for (const auto& [k, v] : params) out << "," << k << "=" << v;
  out << ",seed=" << seed << ")";
  return out.str();
}

Instance make_instance(const EnsembleSpec& spec, int index) {
  if (spec.n < 1) throw std::invalid_argument("ensemble: n must be >= 1");
  Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(index));
  Observable obs;
  if (spec.kind == "pauli_string") {
    obs = make_pauli_string(spec, rng);
  } else if (spec.kind == "classical") {
    const auto walsh = walsh_coefficients(spec.n, [&](std::uint32_t p) {
      return classical_value(spec.classical_name, spec.n, spec.params, p);
    });
    obs = embed_classical(spec.n, walsh);
  } else if (spec.kind == "subcube") {
    obs = make_subcube(spec.n, int_param(spec.params, "k", spec.n));
  } else if (spec.kind == "random_projection") {
    obs = make_random_projection(spec.n, int_param(spec.params, "rank", 1), rng);
  } else if (spec.kind == "random_boolean") {
    const Observable p =
        make_random_projection(spec.n, int_param(spec.params, "rank", 1), rng);
    obs = subtract(scale(p, Complex{2.0, 0.0}), identity_observable(spec.n));
  } else if (spec.kind == "random_contraction") {
    obs = make_random_contraction(spec.n, rng);
  } else if (spec.kind == "random_low_degree") {
    obs = make_random_low_degree(spec.n, int_param(spec.params, "d", 1), rng);
  } else if (spec.kind == "remark_p2") {
    obs = make_remark_p2(spec.n);
  } else {
    throw std::invalid_argument("ensemble: unknown kind '" + spec.kind + "'");
  }
  std::ostringstream id;
  id << spec.describe() << "#" << index;
  return Instance{std::move(obs), id.str()};
}

std::vector<Instance> make_ensemble(const EnsembleSpec& spec) {
  if (spec.count < 0) throw std::invalid_argument("ensemble: negative count");
  std::vector<Instance> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) out.push_back(make_instance(spec, i));
  return out;
}

}  // namespace qhc
