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

#include "qhc/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qhc/kernels.hpp"

namespace qhc {

namespace {

constexpr double kCutAssignTol = 1e-12;
constexpr double kSqrtClipTol = 1e-9;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve_hermitian(const DenseOperator& m,
                                                                const char* what) {
  if (!is_hermitian(m)) {
    throw std::invalid_argument(std::string(what) + ": Hermitian input required");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(std::string(what) + ": eigendecomposition failed");
  }
  return solver;
}

// Singular values of a general matrix through the Hermitian dilation
// [[0, M], [M^*, 0]], whose spectrum is {+-s_i}.
Eigen::VectorXd singular_values(const DenseOperator& m) {
  const std::int64_t d = m.dim();
  Eigen::MatrixXcd dilation = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
  dilation.block(0, d, d, d) = m.mat;
  dilation.block(d, 0, d, d) = m.mat.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dilation);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("singular_values: eigendecomposition failed");
  }
  Eigen::VectorXd out(d);
  // Eigenvalues come sorted ascending; the top half are the singular values.
  for (std::int64_t i = 0; i < d; ++i) out[i] = std::max(0.0, solver.eigenvalues()[d + i]);
  return out;
}

bool pick_eigenvalue(double lambda, double lo, double hi, bool lo_closed, bool hi_closed) {
  bool above_lo;
  if (std::abs(lambda - lo) <= kCutAssignTol) {
    above_lo = lo_closed;
  } else {
    above_lo = lambda > lo;
  }
  bool below_hi;
  if (std::isinf(hi)) {
    below_hi = true;
  } else if (std::abs(lambda - hi) <= kCutAssignTol) {
    below_hi = hi_closed;
  } else {
    below_hi = lambda < hi;
  }
  return above_lo && below_hi;
}

}  // namespace

DenseOperator dense_from_matrix(int sites, Eigen::MatrixXcd mat) {
  const std::int64_t dim = std::int64_t{1} << sites;
  if (mat.rows() != dim || mat.cols() != dim) {
    throw std::invalid_argument("dense_from_matrix: dimension is not 2^sites");
  }
  return DenseOperator{sites, std::move(mat)};
}

DenseOperator dense_identity(int sites) {
  const std::int64_t dim = std::int64_t{1} << sites;
  return DenseOperator{sites, Eigen::MatrixXcd::Identity(dim, dim)};
}

bool is_hermitian(const DenseOperator& m, double tol) {
  return (m.mat - m.mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseOperator synthesize(const Observable& obs) {
  return DenseOperator{obs.sites(), kernels::synthesize_parallel(obs)};
}

Observable analyze(const DenseOperator& m, double drop_epsilon) {
  return kernels::analyze_parallel(m.mat, m.sites, drop_epsilon);
}

Observable analyze(const Eigen::MatrixXcd& mat, int sites, double drop_epsilon) {
  return kernels::analyze_parallel(mat, sites, drop_epsilon);
}

Complex dense_trace(const DenseOperator& m) {
  return m.mat.trace() / static_cast<double>(m.dim());
}

double schatten_norm(const DenseOperator& m, double p) {
  if (p < 1.0) throw std::invalid_argument("schatten_norm: p < 1 rejected");
  Eigen::VectorXd sv;
  if (is_hermitian(m)) {
    sv = solve_hermitian(m, "schatten_norm").eigenvalues().cwiseAbs();
  } else {
    sv = singular_values(m);
  }
  if (std::isinf(p)) return sv.size() == 0 ? 0.0 : sv.maxCoeff();
  double acc = 0.0;
  for (std::int64_t i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], p);
  return std::pow(acc / static_cast<double>(m.dim()), 1.0 / p);
}

double variance(const DenseOperator& m) {
  const double second = m.mat.squaredNorm() / static_cast<double>(m.dim());
  const Complex first = dense_trace(m);
  return second - std::norm(first);
}

Eigen::VectorXd eigenvalues(const DenseOperator& m) {
  return solve_hermitian(m, "eigenvalues").eigenvalues();
}

double psd_margin(const DenseOperator& m) {
  return solve_hermitian(m, "psd_margin").eigenvalues().minCoeff();
}

DenseOperator functional_calculus(const DenseOperator& m,
                                  const std::function<double(double)>& f) {
  const auto solver = solve_hermitian(m, "functional_calculus");
  Eigen::VectorXd mapped = solver.eigenvalues();
  for (std::int64_t i = 0; i < mapped.size(); ++i) mapped[i] = f(mapped[i]);
  Eigen::MatrixXcd out =
      solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
  return DenseOperator{m.sites, std::move(out)};
}

DenseOperator matrix_sqrt(const DenseOperator& m) {
  const auto solver = solve_hermitian(m, "matrix_sqrt");
  if (solver.eigenvalues().minCoeff() < -kSqrtClipTol) {
    throw std::domain_error("matrix_sqrt: eigenvalue below -1e-9");
  }
  Eigen::VectorXd mapped = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd out =
      solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
  return DenseOperator{m.sites, std::move(out)};
}

DenseOperator abs_op(const DenseOperator& m) {
  if (is_hermitian(m)) {
    return functional_calculus(m, [](double x) { return std::abs(x); });
  }
  DenseOperator gram{m.sites, m.mat.adjoint() * m.mat};
  // Round tiny negative eigenvalues of the Gram matrix before the square root.
  return matrix_sqrt(gram);
}

DenseOperator spectral_indicator(const DenseOperator& m, double lo, double hi,
                                 bool lo_closed, bool hi_closed) {
  const auto solver = solve_hermitian(m, "spectral_indicator");
  Eigen::VectorXd mask(solver.eigenvalues().size());
  for (std::int64_t i = 0; i < mask.size(); ++i) {
    mask[i] = pick_eigenvalue(solver.eigenvalues()[i], lo, hi, lo_closed, hi_closed) ? 1.0 : 0.0;
  }
  Eigen::MatrixXcd out =
      solver.eigenvectors() * mask.asDiagonal() * solver.eigenvectors().adjoint();
  return DenseOperator{m.sites, std::move(out)};
}

double spectral_indicator_trace(const DenseOperator& m, double lo, double hi,
                                bool lo_closed, bool hi_closed) {
  const auto solver = solve_hermitian(m, "spectral_indicator");
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < solver.eigenvalues().size(); ++i) {
    if (pick_eigenvalue(solver.eigenvalues()[i], lo, hi, lo_closed, hi_closed)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(m.dim());
}

double layercake_trace(const DenseOperator& s, const DenseOperator& t) {
  if (s.dim() != t.dim()) throw std::invalid_argument("layercake_trace: dimension mismatch");
  const auto solver = solve_hermitian(t, "layercake_trace");
  if (solver.eigenvalues().minCoeff() < -kSqrtClipTol) {
    throw std::domain_error("layercake_trace: second factor must be PSD");
  }
  const std::int64_t d = t.dim();
  // tr(S * 1_{(t,inf)}(T)) is constant on intervals between consecutive
  // eigenvalues of T. With eigenvalues ascending and P_k the projection onto
  // eigenvectors k..d-1, the integral collapses to
  //   sum_k (lambda_k - lambda_{k-1}) * tr(S P_k)   (lambda_0 clamped to 0).
  double acc = 0.0;
  double prev = 0.0;
  Complex tail{0.0, 0.0};
  std::vector<Complex> overlaps(d);
  for (std::int64_t k = 0; k < d; ++k) {
    const Eigen::VectorXcd v = solver.eigenvectors().col(k);
    overlaps[k] = v.adjoint() * s.mat * v;
  }
  for (std::int64_t k = d - 1; k >= 0; --k) tail += overlaps[k];
  // Walk eigenvalues ascending, dropping completed levels from the tail sum.
  Complex running = tail;
  for (std::int64_t k = 0; k < d; ++k) {
    const double lambda = std::max(0.0, solver.eigenvalues()[k]);
    acc += (lambda - prev) * running.real() / static_cast<double>(d);
    prev = lambda;
    running -= overlaps[k];
  }
  return acc;
}

}  // namespace qhc
