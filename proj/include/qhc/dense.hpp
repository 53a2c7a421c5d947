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

#ifndef QHC_DENSE_HPP
#define QHC_DENSE_HPP

#include <Eigen/Dense>
#include <functional>
#include <limits>

#include "qhc/observable.hpp"

namespace qhc {

/// Dense 2^n x 2^n matrix together with its site count. All traces and norms
/// below use the normalized trace, so the identity has norm 1 for every p.
struct DenseOperator {
  int sites = 0;
  Eigen::MatrixXcd mat;

  std::int64_t dim() const { return mat.rows(); }
};

DenseOperator dense_from_matrix(int sites, Eigen::MatrixXcd mat);
DenseOperator dense_identity(int sites);

/// True when max |M - M^*| entry <= tol.
bool is_hermitian(const DenseOperator& m, double tol = 1e-10);

DenseOperator synthesize(const Observable& obs);
Observable analyze(const DenseOperator& m, double drop_epsilon = kStorageEpsilon);
Observable analyze(const Eigen::MatrixXcd& mat, int sites,
                   double drop_epsilon = kStorageEpsilon);

Complex dense_trace(const DenseOperator& m);  // normalized

/// Normalized Schatten norm: (2^-n sum s_i^p)^(1/p), max singular value at
/// p = infinity. Rejects p < 1.
double schatten_norm(const DenseOperator& m, double p);
inline constexpr double kPInf = std::numeric_limits<double>::infinity();

double variance(const DenseOperator& m);

/// Eigenvalues ascending (Hermitian input required).
Eigen::VectorXd eigenvalues(const DenseOperator& m);

/// Minimum eigenvalue; Hermitian input required.
double psd_margin(const DenseOperator& m);

/// f applied to the spectrum in the eigenbasis; Hermitian input required.
DenseOperator functional_calculus(const DenseOperator& m,
                                  const std::function<double(double)>& f);

/// PSD square root; eigenvalues in [-1e-9, 0) clipped to 0, below that rejected.
DenseOperator matrix_sqrt(const DenseOperator& m);

/// |M| = (M^* M)^{1/2}. Uses |eigenvalues| directly when M is Hermitian.
DenseOperator abs_op(const DenseOperator& m);

/// Orthogonal projection onto eigenvectors with eigenvalue in the interval.
/// Closure flags decide the endpoints; eigenvalues within 1e-12 of a cut are
/// assigned by the flag. hi may be +infinity.
DenseOperator spectral_indicator(const DenseOperator& m, double lo, double hi,
                                 bool lo_closed = true, bool hi_closed = false);

/// Normalized trace of the spectral projection, without forming it.
double spectral_indicator_trace(const DenseOperator& m, double lo, double hi,
                                bool lo_closed = true, bool hi_closed = false);

/// Evaluates tr(S T) as the exact finite sum over the piecewise-constant
/// integrand tr(S * 1_{(t,inf)}(T)) between consecutive eigenvalues of T.
/// T must be PSD Hermitian.
double layercake_trace(const DenseOperator& s, const DenseOperator& t);

}  // namespace qhc

#endif
