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

#include "qhc/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qhc/dense.hpp"
#include "qhc/hypercube.hpp"
#include "qhc/kernels.hpp"
#include "qhc/scaffold.hpp"
#include "qhc/subsets.hpp"

namespace qhc {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::skipped_precondition: return "skipped_precondition";
    case CheckStatus::degenerate: return "degenerate";
  }
  return "unknown";
}

CheckStatus resolve_status(double lhs, double rhs, const Tolerances& tol) {
  return lhs > rhs * (1.0 + tol.rel) + tol.abs ? CheckStatus::violated : CheckStatus::holds;
}

void finish_record(CheckRecord& rec, double lhs, double rhs, const Tolerances& tol) {
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.ratio.reset();
  if (rhs > 1e-300) rec.ratio = lhs / rhs;
  rec.status = resolve_status(lhs, rhs, tol);
}

std::uint32_t default_j_mask(int n) { return (1u << ((n + 1) / 2)) - 1u; }

namespace {

constexpr double kE = 2.718281828459045235360287471353;
constexpr double kVarianceFloor = 1e-12;
constexpr double kPsdGateTol = 1e-9;
constexpr double kIdentityTol = 1e-9;

double get(const ParamMap& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int get_int(const ParamMap& params, const std::string& key, int fallback) {
  return static_cast<int>(std::llround(get(params, key, fallback)));
}

SiteSubset j_from_params(const Observable& t, const ParamMap& params) {
  const std::uint32_t fallback = default_j_mask(t.sites());
  const double raw = get(params, "J_mask", static_cast<double>(fallback));
  const auto mask = static_cast<std::uint64_t>(raw);
  if (mask >= (std::uint64_t{1} << t.sites()) && t.sites() < 32) {
    throw std::invalid_argument("J_mask has bits beyond the site count");
  }
  return SiteSubset::from_mask(t.sites(), static_cast<std::uint32_t>(mask));
}

CheckRecord start(const std::string& id, const ParamMap& params) {
  CheckRecord rec;
  rec.check_id = id;
  rec.params = params;
  return rec;
}

bool skip(CheckRecord& rec, const std::string& reason) {
  rec.status = CheckStatus::skipped_precondition;
  rec.note = reason;
  return false;
}

bool mark_degenerate(CheckRecord& rec, const std::string& reason) {
  rec.status = CheckStatus::degenerate;
  rec.note = reason;
  return false;
}

// ---- hypothesis gates -------------------------------------------------

bool gate_hermitian(const Observable& t, CheckRecord& rec) {
  if (!has_real_coeffs(t, 1e-10)) return skip(rec, "not Hermitian");
  return true;
}

bool gate_bounded01(const Observable& t, CheckRecord& rec) {
  if (!gate_hermitian(t, rec)) return false;
  const Eigen::VectorXd eigs = eigenvalues(synthesize(t));
  if (eigs.minCoeff() < -kPsdGateTol || eigs.maxCoeff() > 1.0 + kPsdGateTol) {
    return skip(rec, "0 <= T <= 1 fails");
  }
  return true;
}

bool gate_contraction(const Observable& t, CheckRecord& rec) {
  if (schatten_norm(synthesize(t), kPInf) > 1.0 + kPsdGateTol) {
    return skip(rec, "||T||_inf <= 1 fails");
  }
  return true;
}

bool gate_positive(const Observable& t, CheckRecord& rec) {
  if (!gate_hermitian(t, rec)) return false;
  if (psd_margin(synthesize(t)) < -kPsdGateTol) return skip(rec, "T positive fails");
  return true;
}

bool gate_projection(const Observable& t, CheckRecord& rec) {
  if (!gate_hermitian(t, rec)) return false;
  const Eigen::VectorXd eigs = eigenvalues(synthesize(t));
  for (std::int64_t i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs[i] * eigs[i] - eigs[i]) > kPsdGateTol) {
      return skip(rec, "projection fails");
    }
  }
  return true;
}

bool gate_balanced_projection(const Observable& t, CheckRecord& rec) {
  if (!gate_projection(t, rec)) return false;
  if (std::abs(variance_coeff(t) - 0.25) > kIdentityTol) {
    return skip(rec, "balanced (var = 1/4) fails");
  }
  return true;
}

// ---- shared quantities -------------------------------------------------

double max_influence(const Observable& t, double p) {
  double best = 0.0;
  for (int j = 0; j < t.sites(); ++j) best = std::max(best, influence(t, j, p));
  return best;
}

double max_derivative_l1(const Observable& t) {
  double best = 0.0;
  for (int j = 0; j < t.sites(); ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    best = std::max(best, schatten_norm(synthesize(deriv), 1.0));
  }
  return best;
}

double xlogx(double x) { return x <= 0.0 ? 0.0 : x * std::log(x); }

/// tr_n[|T|^2 log |T|^2] from the spectrum of T^* T.
double entropy_term(const Observable& t) {
  const DenseOperator m = synthesize(t);
  const DenseOperator gram{m.sites, m.mat.adjoint() * m.mat};
  const Eigen::VectorXd eigs = eigenvalues(gram);
  double acc = 0.0;
  for (std::int64_t i = 0; i < eigs.size(); ++i) acc += xlogx(std::max(0.0, eigs[i]));
  return acc / static_cast<double>(m.dim());
}

double modified_ls_constant(double p) { return 4.0 / ((2.0 - p) * kE); }

/// Hermitian part of the coefficient map of X^* X, synthesized densely.
Eigen::MatrixXcd dense_abs_square(const Observable& x) {
  const DenseOperator m = synthesize(x);
  return m.mat.adjoint() * m.mat;
}

/// sum over all dyadic d of the squared slice multiplier at one support size.
double dyadic_multiplier_sq_sum(int support) {
  double acc = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double d = std::pow(2.0, k);
    const double mult = std::pow(1.0 - 0.5 / d, support) - std::pow(1.0 - 1.0 / d, support);
    acc += mult * mult;
    if (d > support && mult * mult * support < 1e-22) break;
  }
  return acc;
}

// ---- individual checks --------------------------------------------------

CheckRecord eval_poincare(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("poincare", params);
  finish_record(rec, variance_coeff(t), total_influence(t, 2.0), tol);
  return rec;
}

CheckRecord eval_log_sobolev(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("log_sobolev", params);
  const double l2sq = norm2_squared(t);
  const double lhs = entropy_term(t) - xlogx(l2sq);
  finish_record(rec, lhs, 2.0 * total_influence(t, 2.0), tol);
  return rec;
}

CheckRecord eval_modified_log_sobolev(const Observable& t, const ParamMap& params,
                                      const Tolerances& tol) {
  CheckRecord rec = start("modified_log_sobolev", params);
  const double p = get(params, "p", 1.0);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_contraction(t, rec)) return rec;
  const double kp = modified_ls_constant(p);
  const double l2 = std::sqrt(norm2_squared(t));
  const double lp = schatten_norm(synthesize(t), p);
  const double lhs = -kp * l2 * std::pow(lp, p / 2.0) - xlogx(l2 * l2);
  finish_record(rec, lhs, 2.0 * total_influence(t, 2.0), tol);
  return rec;
}

CheckRecord eval_dim_free_kkl(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("dim_free_kkl", params);
  const double p = get(params, "p", 1.0);
  const double k = get(params, "K", 1.0);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  const double total = total_influence(t, p);
  const double lhs = 0.25 * std::exp(-(k / (2.0 - p)) * total / var);
  finish_record(rec, lhs, max_influence(t, p), tol);
  return rec;
}

std::optional<double> ratio_dim_free_kkl(const Observable& t, const ParamMap& params) {
  const double p = get(params, "p", 1.0);
  CheckRecord probe = start("dim_free_kkl", params);
  if (p < 1.0 || p >= 2.0) return std::nullopt;
  if (!gate_bounded01(t, probe)) return std::nullopt;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return std::nullopt;
  const double total = total_influence(t, p);
  const double max_inf = max_influence(t, p);
  if (max_inf <= 0.0 || total <= 0.0) return std::nullopt;
  // Minimal K with (1/4) exp(-K/(2-p) * total/var) <= max_inf.
  if (max_inf >= 0.25) return 0.0;
  return (2.0 - p) * std::log(0.25 / max_inf) * var / total;
}

CheckRecord eval_kkl_lp(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("kkl_lp", params);
  const double p = get(params, "p", 1.0);
  const double c = get(params, "C", 1.0);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  const double n = t.sites();
  finish_record(rec, c * (2.0 - p) * var * std::log(n) / n, max_influence(t, p), tol);
  return rec;
}

CheckRecord eval_talagrand_influence(const Observable& t, const ParamMap& params,
                                     const Tolerances& tol) {
  CheckRecord rec = start("talagrand_influence", params);
  const double p = get(params, "p", 1.0);
  const double cp = get(params, "C_p", 1.0);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  bool clamped = false;
  double sum = 0.0;
  for (int j = 0; j < t.sites(); ++j) {
    const double inf = influence(t, j, p);
    if (inf <= 0.0) continue;  // zero influences contribute nothing
    double denom = std::log(1.0 / inf);
    if (inf >= 1.0 - 1e-12) {
      denom = 1e-12;
      clamped = true;
    }
    sum += inf / denom;
  }
  finish_record(rec, variance_coeff(t), cp * sum, tol);
  if (clamped) {
    rec.status = CheckStatus::degenerate;
    rec.note = "influence at 1: log denominator clamped";
  }
  return rec;
}

CheckRecord eval_isoperimetric(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("isoperimetric", params);
  const double k = get(params, "K", 1.0);
  if (!gate_projection(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  if (var > 1.0 / kE) return (mark_degenerate(rec, "log(1/var) negative"), rec);
  finish_record(rec, var * std::sqrt(std::log(1.0 / var)), k * gradient_lp(t, 1.0), tol);
  return rec;
}

CheckRecord eval_eldan_gross(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("eldan_gross", params);
  const double k = get(params, "K", 1.0);
  if (!gate_projection(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  const double mass = geometric_mass(t);
  if (mass <= 0.0) return (mark_degenerate(rec, "M(T) = 0"), rec);
  finish_record(rec, var * std::sqrt(std::log1p(1.0 / mass)), k * gradient_lp(t, 1.0), tol);
  return rec;
}

CheckRecord eval_buser(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("buser", params);
  const double p = get(params, "p", 2.0);
  const double time = get(params, "t", 0.5);
  if (p < 1.0 || p > 2.0) return (skip(rec, "p must lie in [1,2]"), rec);
  if (time < 0.0) return (skip(rec, "t must be >= 0"), rec);
  const double lhs = schatten_norm(synthesize(t - semigroup(t, time)), p);
  finish_record(rec, lhs, std::sqrt(2.0 * time) * gradient_lp(t, p), tol);
  return rec;
}

CheckRecord eval_local_reverse_poincare(const Observable& t, const ParamMap& params,
                                        const Tolerances& tol) {
  CheckRecord rec = start("local_reverse_poincare", params);
  const double time = get(params, "t", 0.5);
  if (time < 0.0) return (skip(rec, "t must be >= 0"), rec);
  const int n = t.sites();
  const std::int64_t dim = std::int64_t{1} << n;
  // e^{-tL}(|T|^2) needs |T|^2 in coefficient form.
  const Observable abs_sq = analyze(Eigen::MatrixXcd(dense_abs_square(t)), n);
  Eigen::MatrixXcd gap = synthesize(semigroup(abs_sq, time)).mat;
  gap -= dense_abs_square(semigroup(t, time));
  Eigen::MatrixXcd grad_part = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    const Observable deriv = semigroup(partial_derivative(t, j), time);
    if (deriv.is_zero()) continue;
    grad_part += dense_abs_square(deriv);
  }
  // The site-j carre du champ is |d_j .|^2 + E_j(|d_j .|^2); only the first
  // term carries the e^{2s} lower bound, so the factor is (e^{2t}-1)/2.
  // The doubled factor fails on the two-site swap unitary.
  gap -= 0.5 * (std::exp(2.0 * time) - 1.0) * grad_part;
  const double margin = psd_margin(DenseOperator{n, std::move(gap)});
  finish_record(rec, -margin, kIdentityTol, tol);
  rec.note = "lhs = -(PSD margin of the reverse Poincare gap), factor (e^{2t}-1)/2";
  return rec;
}

CheckRecord eval_gradient_estimate(const Observable& t, const ParamMap& params,
                                   const Tolerances& tol) {
  CheckRecord rec = start("gradient_estimate", params);
  const double p = get(params, "p", 2.0);
  const double time = get(params, "t", 0.5);
  if (p < 2.0) return (skip(rec, "p must be >= 2"), rec);
  if (time <= 0.0) return (skip(rec, "t must be > 0"), rec);
  const double lhs = gradient_lp(semigroup(t, time), p);
  finish_record(rec, lhs, schatten_norm(synthesize(t), p) / std::sqrt(2.0 * time), tol);
  return rec;
}

// L(T*T) - L(T)*T - T*L(T) = -sum_j [ |d_j T|^2 + E_j(|d_j T|^2) ].
// Classically E_j fixes |d_j f|^2 and the bracket collapses to 2|d_j f|^2;
// with matrix entries the two terms differ (the two-site swap unitary
// separates them), so the identity is checked in this split form.
Eigen::MatrixXcd curvature_gap(const Observable& t, double derivative_term_sign) {
  const int n = t.sites();
  const DenseOperator m = synthesize(t);
  const Observable gram_obs = analyze(Eigen::MatrixXcd(m.mat.adjoint() * m.mat), n);
  Eigen::MatrixXcd gap = synthesize(generator_apply(gram_obs)).mat -
                         synthesize(generator_apply(adjoint(t))).mat * m.mat -
                         m.mat.adjoint() * synthesize(generator_apply(t)).mat;
  for (int j = 0; j < n; ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    const Eigen::MatrixXcd sq = dense_abs_square(deriv);
    const Observable sq_obs = analyze(sq, n);
    // E_j keeps the terms with a zero digit at j.
    const Observable conditioned = sq_obs - partial_derivative(sq_obs, j);
    gap += derivative_term_sign * (sq + synthesize(conditioned).mat);
  }
  return gap;
}

CheckRecord eval_curvature_i(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("curvature_i", params);
  const double deviation = curvature_gap(t, +1.0).cwiseAbs().maxCoeff();
  finish_record(rec, deviation, kIdentityTol, tol);
  rec.note = "exact identity; lhs = max entry deviation";
  return rec;
}

// Same identity with the derivative term sign flipped. Kept as a negative
// control: it must report `violated` on any nonconstant instance, guarding
// the harness against vacuously-passing checkers.
CheckRecord eval_curvature_i_negative_control(const Observable& t, const ParamMap& params,
                                              const Tolerances& tol) {
  CheckRecord rec = start("curvature_i_negative_control", params);
  const double deviation = curvature_gap(t, -1.0).cwiseAbs().maxCoeff();
  finish_record(rec, deviation, kIdentityTol, tol);
  rec.note = "deliberately corrupted sign; expected to be violated";
  return rec;
}

CheckRecord eval_curvature_ii(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("curvature_ii", params);
  const double time = get(params, "t", 0.5);
  if (time < 0.0) return (skip(rec, "t must be >= 0"), rec);
  const int n = t.sites();
  const bool single_site = params.contains("j");
  const int j_lo = single_site ? get_int(params, "j", 0) : 0;
  const int j_hi = single_site ? j_lo + 1 : n;
  if (j_lo < 0 || j_lo >= n) return (skip(rec, "site out of range"), rec);
  double worst = 0.0;
  for (int j = j_lo; j < j_hi; ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    const Observable sq = analyze(Eigen::MatrixXcd(dense_abs_square(deriv)), n);
    Eigen::MatrixXcd gap =
        std::exp(-2.0 * time) * synthesize(semigroup(sq, time)).mat -
        dense_abs_square(semigroup(deriv, time));
    worst = std::max(worst, -psd_margin(DenseOperator{n, std::move(gap)}));
  }
  finish_record(rec, worst, kIdentityTol, tol);
  rec.note = "lhs = worst -(PSD margin) over sites";
  return rec;
}

CheckRecord eval_curvature_iii(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("curvature_iii", params);
  const double time = get(params, "t", 0.5);
  if (time < 0.0) return (skip(rec, "t must be >= 0"), rec);
  const int n = t.sites();
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd sum_sq = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd sum_evolved = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    const Observable deriv = partial_derivative(t, j);
    if (deriv.is_zero()) continue;
    sum_sq += dense_abs_square(deriv);
    sum_evolved += dense_abs_square(semigroup(deriv, time));
  }
  const Observable sum_obs = analyze(Eigen::MatrixXcd(sum_sq), n);
  Eigen::MatrixXcd gap =
      std::exp(-2.0 * time) * synthesize(semigroup(sum_obs, time)).mat - sum_evolved;
  const double margin = psd_margin(DenseOperator{n, std::move(gap)});
  finish_record(rec, -margin, kIdentityTol, tol);
  return rec;
}

CheckRecord eval_fundamental_identity(const Observable& t, const ParamMap& params,
                                      const Tolerances& tol) {
  CheckRecord rec = start("fundamental_identity", params);
  const double time = get(params, "t", 0.5);
  if (time < 0.0) return (skip(rec, "t must be >= 0"), rec);
  if (!gate_projection(t, rec)) return rec;
  const double moved = schatten_norm(synthesize(t - semigroup(t, time)), 1.0);
  const double rhs = moved + variance_coeff(semigroup(t, time / 2.0));
  finish_record(rec, variance_coeff(t), rhs, tol);
  return rec;
}

CheckRecord eval_high_degree(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("high_degree", params);
  const int d = get_int(params, "d", 1);
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  if (!gate_projection(t, rec)) return rec;
  finish_record(rec, 0.25 * std::sqrt(d) * weight_geq(t, d), gradient_lp(t, 1.0), tol);
  return rec;
}

CheckRecord eval_moment_comparison(const Observable& t, const ParamMap& params,
                                   const Tolerances& tol) {
  CheckRecord rec = start("moment_comparison", params);
  const double r = get(params, "r", 3.0);
  if (r < 2.0) return (skip(rec, "r must be >= 2"), rec);
  const int k = degree(t);
  const double rhs = std::pow(r - 1.0, k / 2.0) * std::sqrt(norm2_squared(t));
  finish_record(rec, schatten_norm(synthesize(t), r), rhs, tol);
  return rec;
}

CheckRecord eval_hypercontractivity_sample(const Observable& t, const ParamMap& params,
                                           const Tolerances& tol) {
  CheckRecord rec = start("hypercontractivity_sample", params);
  const double p = get(params, "p", 2.0);
  const double q = get(params, "q", 4.0);
  const double time = get(params, "t", 0.5 * std::log(3.0));
  if (!(1.0 < p && p <= q)) return (skip(rec, "need 1 < p <= q"), rec);
  const double critical = 0.5 * std::log((q - 1.0) / (p - 1.0));
  if (time < critical - 1e-15) return (skip(rec, "t below the contractive time"), rec);
  const double lhs = schatten_norm(synthesize(semigroup(t, time)), q);
  finish_record(rec, lhs, schatten_norm(synthesize(t), p), tol);
  return rec;
}

CheckRecord eval_deviation(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("deviation", params);
  const double threshold = get(params, "t", 1.0);
  const double k = get(params, "K", 1.0);
  if (threshold <= 0.0) return (skip(rec, "t must be > 0"), rec);
  if (norm2_squared(t) > 1.0 + 1e-9) return (skip(rec, "||T||_2 <= 1 fails"), rec);
  const int d = degree(t);
  if (d < 1) return (mark_degenerate(rec, "degree 0"), rec);
  const double lhs =
      spectral_indicator_trace(abs_op(synthesize(t)), threshold, kPInf, true, false);
  finish_record(rec, lhs, k * std::exp(-d * std::pow(threshold, 2.0 / d) / (4.0 * kE)), tol);
  return rec;
}

CheckRecord eval_paley_zygmund(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("paley_zygmund", params);
  const double delta = get(params, "delta", 0.5);
  if (delta <= 0.0 || delta >= 1.0) return (skip(rec, "delta must lie in (0,1)"), rec);
  if (!gate_positive(t, rec)) return rec;
  const double l2sq = norm2_squared(t);
  if (l2sq < kVarianceFloor) return (mark_degenerate(rec, "T ~ 0"), rec);
  const DenseOperator m = synthesize(t);
  const double l1 = schatten_norm(m, 1.0);
  const double lhs = (1.0 - delta) * (1.0 - delta) * l1 * l1 / l2sq;
  finish_record(rec, lhs, spectral_indicator_trace(m, delta * l1, kPInf, true, false), tol);
  return rec;
}

CheckRecord eval_kk18(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("kk18", params);
  const int d = get_int(params, "d", 1);
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  if (!gate_projection(t, rec)) return rec;
  const double mass = geometric_mass(t);
  if (mass > std::exp(-2.0 * d)) return (skip(rec, "M(T) <= e^{-2d} fails"), rec);
  if (mass <= 0.0) {
    finish_record(rec, weight_eq(t, d), 0.0, tol);
    rec.note = "M(T) = 0; lhs vanishes with it";
    return rec;
  }
  const double rhs =
      (6.0 * kE / d) * std::pow(2.0 * kE / d, d) * mass * std::pow(std::log(d / mass), d);
  finish_record(rec, weight_eq(t, d), rhs, tol);
  return rec;
}

CheckRecord eval_key_prop(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("key_prop", params);
  const int d = get_int(params, "d", 1);
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  const SiteSubset j_set = j_from_params(t, params);
  rec.params["J_mask"] = static_cast<double>(j_set.mask);
  if (!gate_projection(t, rec)) return rec;
  const double mass = geometric_mass(t);
  if (mass > std::exp(-2.0 * d)) return (skip(rec, "M(T) <= e^{-2d} fails"), rec);
  // Words of support size d meeting J in exactly one site.
  double lhs = 0.0;
  for (const auto& [s, c] : t.terms()) {
    if (support_size(s) != d) continue;
    int hits = 0;
    for (int j = 0; j < t.sites(); ++j) {
      if (s[j] != 0 && j_set.contains(j)) ++hits;
    }
    if (hits == 1) lhs += std::norm(c);
  }
  const double mass_j = geometric_mass(t, j_set);
  if (mass_j <= 0.0) {
    finish_record(rec, lhs, 0.0, tol);
    rec.note = "M_J(T) = 0; lhs vanishes with it";
    return rec;
  }
  const double rhs = 6.0 * std::pow(2.0 * kE / d, d) * mass_j * std::pow(std::log(1.0 / mass_j), d);
  finish_record(rec, lhs, rhs, tol);
  return rec;
}

CheckRecord eval_main_spectral(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("main_spectral", params);
  if (!gate_projection(t, rec)) return rec;
  const double mass = geometric_mass(t);
  if (mass <= 0.0) return (mark_degenerate(rec, "M(T) = 0"), rec);
  const double cutoff = std::log(1.0 / mass) / 10.0;
  double lhs = 0.0;
  for (const auto& [s, c] : t.terms()) {
    const int k = support_size(s);
    if (k >= 1 && k <= cutoff) lhs += std::norm(c);
  }
  finish_record(rec, lhs, 12.0 * kE * std::pow(mass, 0.4), tol);
  if (cutoff < 1.0) rec.note = "empty band: vacuous";
  return rec;
}

CheckRecord eval_dgood(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("dgood", params);
  const double p = get(params, "p", 1.0);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  const double total = total_influence(t, p);
  if (total <= 0.0) return (mark_degenerate(rec, "no influences"), rec);
  const double threshold = var * var / (16.0 * total);
  double selected = 0.0;
  for (int d = 1; d <= t.sites(); d *= 2) {
    const double w = weight_approx(t, d);
    if (w >= threshold) selected += w;
  }
  finish_record(rec, 0.5 * var, selected, tol);
  return rec;
}

CheckRecord eval_lehd(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("lehd", params);
  const int d = get_int(params, "d", 1);
  const double p = get(params, "p", 1.5);
  if (d < 1 || (d & (d - 1)) != 0) return (skip(rec, "d must be a power of two"), rec);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  const Observable slice = spectral_slice(t, d);
  // Worst subclaim by the resolve margin, so the aggregate status matches a
  // per-subclaim resolve at every scale.
  double worst_margin = -kPInf;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  std::string worst_part;
  auto consider = [&](const char* part, double lhs, double rhs) {
    const double margin = lhs - (rhs * (1.0 + tol.rel) + tol.abs);
    if (margin > worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_part = part;
    }
  };
  // (i) |H_d(T)| <= 1.
  consider("abs_bound", schatten_norm(synthesize(slice), kPInf), 1.0);
  // (ii) derivative norms under the slice.
  for (int j = 0; j < t.sites(); ++j) {
    const Observable dj_slice = partial_derivative(slice, j);
    const Observable dj = partial_derivative(t, j);
    const double lhs =
        dj_slice.is_zero() ? 0.0 : std::pow(schatten_norm(synthesize(dj_slice), p), p);
    const double rhs =
        dj.is_zero() ? 0.0 : std::pow(2.0, p) * std::pow(schatten_norm(synthesize(dj), p), p);
    consider("derivative_norm", lhs, rhs);
  }
  // (iii) band multipliers and coefficient sandwich.
  for (int m = d; m < 2 * d && m <= t.sites(); ++m) {
    const double mult = spectral_slice_multiplier(d, m);
    consider("band_multiplier_upper", mult, 1.0);
    consider("band_multiplier_lower", 0.25, mult);
  }
  for (const auto& [s, c] : t.terms()) {
    const int m = support_size(s);
    if (m < d || m >= 2 * d) continue;
    const double orig = std::abs(c);
    const double sliced = std::abs(slice.coeff(s));
    consider("coeff_upper", sliced, orig);
    consider("coeff_lower", 0.25 * orig, sliced);
  }
  // (iv) dyadic sums against variance and influence.
  double sum_l2 = 0.0;
  double sum_inf = 0.0;
  for (const auto& [s, c] : t.terms()) {
    const int m = support_size(s);
    if (m == 0) continue;
    const double g = dyadic_multiplier_sq_sum(m);
    sum_l2 += g * std::norm(c);
    sum_inf += m * g * std::norm(c);
  }
  consider("dyadic_l2_sum", sum_l2, variance_coeff(t));
  consider("dyadic_influence_sum", sum_inf, total_influence(t, 2.0));
  finish_record(rec, worst_lhs, worst_rhs, tol);
  rec.note = "worst subclaim: " + worst_part;
  return rec;
}

CheckRecord eval_comlemma(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("comlemma", params);
  const double p = get(params, "p", 1.0);
  const int d = get_int(params, "d", 1);
  if (p < 1.0 || p >= 2.0) return (skip(rec, "p must lie in [1,2)"), rec);
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  if (!gate_bounded01(t, rec)) return rec;
  const double max_inf = max_influence(t, p);
  if (max_inf <= 0.0) return (mark_degenerate(rec, "all derivatives vanish"), rec);
  if (max_inf >= 1.0 - 1e-12) return (mark_degenerate(rec, "max influence at 1"), rec);
  const double w = weight_approx(t, d);
  const double kp = modified_ls_constant(p);
  const double lhs = std::log(1.0 / max_inf) * w / 16.0 -
                     (kp / 16.0) * std::sqrt(total_influence(t, p)) * std::sqrt(w);
  finish_record(rec, lhs, total_influence(t, 2.0) + variance_coeff(t), tol);
  return rec;
}

CheckRecord eval_kkl_geometric(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("kkl_geometric", params);
  const double c = get(params, "C", 1.0);
  if (!gate_balanced_projection(t, rec)) return rec;
  const double n = t.sites();
  finish_record(rec, c * std::sqrt(std::log(n)) / n, max_derivative_l1(t), tol);
  return rec;
}

CheckRecord eval_kkl_dichotomy(const Observable& t, const ParamMap& params,
                               const Tolerances& tol) {
  CheckRecord rec = start("kkl_dichotomy", params);
  const double eps = get(params, "epsilon", 0.5);
  const double c = get(params, "C", 1.0);
  if (eps <= 0.0 || eps >= 1.0) return (skip(rec, "epsilon must lie in (0,1)"), rec);
  if (!gate_balanced_projection(t, rec)) return rec;
  const double n = t.sites();
  if (n < 2) return (mark_degenerate(rec, "log(n) = 0"), rec);
  const double b1 = max_influence(t, 2.0);
  const double b2 = max_derivative_l1(t);
  if (b1 <= 0.0 || b2 <= 0.0) return (mark_degenerate(rec, "no derivatives"), rec);
  // Either branch may hold: record how far the easier branch is from holding.
  const double branch1 = c * eps * std::log(n) / n / b1;
  const double branch2 = c / std::pow(n, (1.0 + eps) / 2.0) / b2;
  finish_record(rec, std::min(branch1, branch2), 1.0, tol);
  rec.note = "lhs = min over branches of required/actual";
  return rec;
}

CheckRecord eval_kkl_index(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("kkl_index", params);
  const double c = get(params, "C", 1.0);
  if (!gate_balanced_projection(t, rec)) return rec;
  const IndexResult ind = index_of(t);
  if (ind.status == IndexStatus::undefined) return (skip(rec, "index undefined"), rec);
  if (ind.value >= 2.0 - 1e-9) return (skip(rec, "ind(T) < 2 fails"), rec);
  const double n = t.sites();
  finish_record(rec, c * std::log(n) / n, max_influence(t, 2.0), tol);
  rec.note = "ind(T) = " + std::to_string(ind.value);
  return rec;
}

CheckRecord eval_stability(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("stability", params);
  const double c1 = get(params, "C1", 1.0);
  const double c2 = get(params, "C2", 1.0);
  if (!gate_projection(t, rec)) return rec;
  const double var = variance_coeff(t);
  if (var < kVarianceFloor) return (mark_degenerate(rec, "variance ~ 0"), rec);
  const double n = t.sites();
  if (max_derivative_l1(t) > c1 * std::log(n) * var / n) {
    return (skip(rec, "gate max_j ||d_j T||_1 <= C1 log(n) var / n fails"), rec);
  }
  const double threshold = 0.5 * var * std::sqrt(std::log(n));
  const double mass =
      spectral_indicator_trace(gradient_magnitude(t), threshold, kPInf, false, false);
  finish_record(rec, c2 * var, mass, tol);
  return rec;
}

CheckRecord eval_calculus_bound(const Observable&, const ParamMap& params,
                                const Tolerances& tol) {
  CheckRecord rec = start("calculus_bound", params);
  const int d = get_int(params, "d", 1);
  const double t0 = get(params, "t0", 2.0 * std::pow(4.0 * kE, 0.5));
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  if (t0 <= std::pow(4.0 * kE, d / 2.0)) return (skip(rec, "t0 > (4e)^{d/2} fails"), rec);
  const auto integrand = [d](double x) {
    return x * x * std::exp(-d * std::pow(x, 2.0 / d) / (2.0 * kE));
  };
  // Truncate where the integrand falls below 1e-16 of its value at t0.
  const double floor_value = integrand(t0) * 1e-16;
  double hi = t0;
  while (integrand(hi) > floor_value) hi *= 1.5;
  // Adaptive Simpson, absolute tolerance 1e-8.
  std::function<double(double, double, double, double, double, double)> simpson =
      [&](double a, double b, double fa, double fm, double fb, double tol_here) -> double {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = integrand(lm);
    const double frm = integrand(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (std::abs(left + right - whole) < 15.0 * tol_here || (b - a) < 1e-12 * t0) {
      return left + right + (left + right - whole) / 15.0;
    }
    return simpson(a, m, fa, flm, fm, tol_here / 2.0) +
           simpson(m, b, fm, frm, fb, tol_here / 2.0);
  };
  const double mid = 0.5 * (t0 + hi);
  const double integral =
      simpson(t0, hi, integrand(t0), integrand(mid), integrand(hi), 1e-8);
  const double rhs =
      5.0 * kE * std::pow(t0, 3.0 - 2.0 / d) * std::exp(-d * std::pow(t0, 2.0 / d) / (2.0 * kE));
  finish_record(rec, integral, rhs, tol);
  return rec;
}

CheckRecord eval_tav(const Observable& t, const ParamMap& params, const Tolerances&) {
  const double delta = get(params, "delta", 0.5);
  CheckRecord rec = check_tav(t, delta);
  rec.params = params;
  rec.params["delta"] = delta;
  return rec;
}

CheckRecord eval_zrr(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("zrr", params);
  const int d = get_int(params, "d", 1);
  if (d < 1) return (skip(rec, "d must be >= 1"), rec);
  if (!gate_contraction(t, rec)) return rec;
  ZrrResult result = zrr_expectation(t, d);
  result.record.params = rec.params;
  result.record.status = resolve_status(result.record.lhs, result.record.rhs, tol);
  return result.record;
}

CheckRecord eval_prrr(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("prrr", params);
  const double p = get(params, "p", 1.5);
  if (p < 1.0 || p > 2.0) return (skip(rec, "p must lie in [1,2]"), rec);
  const SiteSubset j_set = j_from_params(t, params);
  rec.params["J_mask"] = static_cast<double>(j_set.mask);
  if (!gate_contraction(t, rec)) return rec;
  double worst_margin = -kPInf;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  std::string worst_part;
  auto consider = [&](const char* part, double lhs, double rhs) {
    const double margin = lhs - (rhs * (1.0 + tol.rel) + tol.abs);
    if (margin > worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_part = part;
    }
  };
  // The L2-vs-Lp comparison needs |R| <= 1, which holds when 0 <= T <= 1
  // (both T and its site average sit in [0,1], so the derivative is
  // sandwiched) but can fail for merely +-1-bounded elements: on the
  // two-site swap unitary ||d_j .||_inf reaches 3/2.
  const bool positive = has_real_coeffs(t, 1e-10) && psd_margin(synthesize(t)) >= -kPsdGateTol;
  double sum_restricted_influence = 0.0;
  for (int j = 0; j < t.sites(); ++j) {
    const Observable restricted = restriction(t, j, j_set);
    const double rp =
        restricted.is_zero() ? 0.0 : std::pow(schatten_norm(synthesize(restricted), p), p);
    const Observable deriv = partial_derivative(t, j);
    const double dp = deriv.is_zero() ? 0.0 : std::pow(schatten_norm(synthesize(deriv), p), p);
    consider("restriction_vs_derivative", rp, dp);
    if (positive) consider("l2_vs_lp", norm2_squared(restricted), rp);
    if (j_set.contains(j)) sum_restricted_influence += total_influence(restricted, 2.0);
  }
  consider("influence_budget", sum_restricted_influence,
           variance_coeff(t) + total_influence(t, 2.0));
  finish_record(rec, worst_lhs, worst_rhs, tol);
  rec.note = "worst subclaim: " + worst_part;
  if (!positive) rec.note += " (L2-vs-Lp subclaim needs 0 <= T <= 1: skipped)";
  return rec;
}

CheckRecord eval_cor_ik1(const Observable& t, const ParamMap& params, const Tolerances& tol) {
  CheckRecord rec = start("cor_ik1", params);
  const SiteSubset j_set = j_from_params(t, params);
  rec.params["J_mask"] = static_cast<double>(j_set.mask);
  double worst_margin = -kPInf;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  std::string worst_part;
  auto consider = [&](const char* part, double lhs, double rhs) {
    const double margin = lhs - (rhs * (1.0 + tol.rel) + tol.abs);
    if (margin > worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_part = part;
    }
  };
  // (i) exact split of the restricted influence across J^c and the site itself.
  for (int j : j_set.members()) {
    const Observable restricted = restriction(t, j, j_set);
    double split = norm2_squared(partial_derivative(restricted, j));
    for (int k : j_set.complement().members()) {
      split += norm2_squared(partial_derivative(restricted, k));
    }
    const double full = total_influence(restricted, 2.0);
    consider("influence_split", std::abs(full - split), kIdentityTol);
  }
  // (ii) restriction budget against the variance.
  consider("variance_budget", restriction_mass(t, j_set), variance_coeff(t));
  // (iii) per-site budget over J^c.
  for (int k : j_set.complement().members()) {
    double sum = 0.0;
    for (int j : j_set.members()) {
      sum += norm2_squared(partial_derivative(restriction(t, j, j_set), k));
    }
    consider("per_site_budget", sum, norm2_squared(partial_derivative(t, k)));
  }
  finish_record(rec, worst_lhs, worst_rhs, tol);
  rec.note = "worst subclaim: " + worst_part;
  return rec;
}

// ---- registry assembly ---------------------------------------------------

std::optional<double> generic_ratio(const std::string& id, const Observable& t,
                                    ParamMap params) {
  const CheckDef* def = find_check(id);
  if (def->form != ConstantForm::none && !def->constant_name.empty()) {
    params[def->constant_name] = 1.0;
  }
  const CheckRecord rec = def->eval(t, params, Tolerances{});
  if (rec.status == CheckStatus::skipped_precondition ||
      rec.status == CheckStatus::degenerate) {
    return std::nullopt;
  }
  if (rec.rhs <= 1e-300) return std::nullopt;
  return rec.lhs / rec.rhs;
}

std::vector<ParamMap> grid(std::initializer_list<ParamMap> sets) { return sets; }

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  auto push = [&](CheckDef def) {
    if (!def.ratio) {
      const std::string id = def.id;
      def.ratio = [id](const Observable& t, const ParamMap& params) {
        return generic_ratio(id, t, params);
      };
    }
    defs.push_back(std::move(def));
  };

  const double hc_t24 = 0.5 * std::log(3.0);
  const double hc_t152 = 0.5 * std::log(2.0);

  push({"poincare", true, ConstantForm::none, "", {{}}, eval_poincare, nullptr});
  push({"log_sobolev", true, ConstantForm::none, "", {{}}, eval_log_sobolev, nullptr});
  push({"modified_log_sobolev", true, ConstantForm::none, "",
        grid({{{"p", 1.0}}, {{"p", 1.5}}}), eval_modified_log_sobolev, nullptr});
  push({"dim_free_kkl", false, ConstantForm::exp_rate, "K",
        grid({{{"p", 1.0}}, {{"p", 1.5}}}), eval_dim_free_kkl, ratio_dim_free_kkl});
  push({"kkl_lp", false, ConstantForm::scale_lhs, "C",
        grid({{{"p", 1.0}}, {{"p", 1.5}}}), eval_kkl_lp, nullptr});
  push({"talagrand_influence", false, ConstantForm::scale_rhs, "C_p",
        grid({{{"p", 1.0}}, {{"p", 1.5}}}), eval_talagrand_influence, nullptr});
  push({"isoperimetric", false, ConstantForm::scale_rhs, "K", {{}}, eval_isoperimetric,
        nullptr});
  push({"eldan_gross", false, ConstantForm::scale_rhs, "K", {{}}, eval_eldan_gross, nullptr});
  push({"buser", true, ConstantForm::none, "",
        grid({{{"p", 1.0}, {"t", 0.1}}, {{"p", 1.0}, {"t", 0.5}}, {{"p", 1.0}, {"t", 1.0}},
              {{"p", 2.0}, {"t", 0.1}}, {{"p", 2.0}, {"t", 0.5}}, {{"p", 2.0}, {"t", 1.0}}}),
        eval_buser, nullptr});
  push({"local_reverse_poincare", true, ConstantForm::none, "",
        grid({{{"t", 0.1}}, {{"t", 0.5}}, {{"t", 1.0}}}), eval_local_reverse_poincare,
        nullptr});
  push({"gradient_estimate", true, ConstantForm::none, "",
        grid({{{"p", 2.0}, {"t", 0.1}}, {{"p", 2.0}, {"t", 0.5}}, {{"p", 2.0}, {"t", 1.0}},
              {{"p", 4.0}, {"t", 0.1}}, {{"p", 4.0}, {"t", 0.5}}, {{"p", 4.0}, {"t", 1.0}}}),
        eval_gradient_estimate, nullptr});
  push({"curvature_i", true, ConstantForm::none, "", {{}}, eval_curvature_i, nullptr});
  push({"curvature_ii", true, ConstantForm::none, "",
        grid({{{"t", 0.1}}, {{"t", 0.5}}, {{"t", 1.0}}}), eval_curvature_ii, nullptr});
  push({"curvature_iii", true, ConstantForm::none, "",
        grid({{{"t", 0.1}}, {{"t", 0.5}}, {{"t", 1.0}}}), eval_curvature_iii, nullptr});
  push({"fundamental_identity", true, ConstantForm::none, "",
        grid({{{"t", 0.1}}, {{"t", 0.5}}, {{"t", 1.0}}}), eval_fundamental_identity, nullptr});
  push({"high_degree", true, ConstantForm::none, "",
        grid({{{"d", 1.0}}, {{"d", 2.0}}, {{"d", 4.0}}}), eval_high_degree, nullptr});
  push({"moment_comparison", true, ConstantForm::none, "",
        grid({{{"r", 3.0}}, {{"r", 4.0}}, {{"r", 6.0}}}), eval_moment_comparison, nullptr});
  push({"hypercontractivity_sample", true, ConstantForm::none, "",
        grid({{{"p", 2.0}, {"q", 4.0}, {"t", hc_t24}},
              {{"p", 2.0}, {"q", 4.0}, {"t", 1.0}},
              {{"p", 1.5}, {"q", 2.0}, {"t", hc_t152}}}),
        eval_hypercontractivity_sample, nullptr});
  push({"deviation", false, ConstantForm::scale_rhs, "K",
        grid({{{"t", 0.5}}, {{"t", 1.0}}, {{"t", 2.0}}}), eval_deviation, nullptr});
  push({"paley_zygmund", true, ConstantForm::none, "",
        grid({{{"delta", 0.25}}, {{"delta", 0.5}}}), eval_paley_zygmund, nullptr});
  push({"kk18", true, ConstantForm::none, "", grid({{{"d", 1.0}}, {{"d", 2.0}}}), eval_kk18,
        nullptr});
  push({"key_prop", true, ConstantForm::none, "", grid({{{"d", 1.0}}, {{"d", 2.0}}}),
        eval_key_prop, nullptr});
  push({"main_spectral", true, ConstantForm::none, "", {{}}, eval_main_spectral, nullptr});
  push({"dgood", true, ConstantForm::none, "", grid({{{"p", 1.0}}, {{"p", 1.5}}}), eval_dgood,
        nullptr});
  push({"lehd", true, ConstantForm::none, "",
        grid({{{"d", 1.0}, {"p", 1.5}}, {{"d", 2.0}, {"p", 1.5}}, {{"d", 4.0}, {"p", 1.5}},
              {{"d", 1.0}, {"p", 1.0}}}),
        eval_lehd, nullptr});
  push({"comlemma", true, ConstantForm::none, "",
        grid({{{"p", 1.0}, {"d", 1.0}}, {{"p", 1.0}, {"d", 2.0}}, {{"p", 1.0}, {"d", 4.0}},
              {{"p", 1.5}, {"d", 1.0}}, {{"p", 1.5}, {"d", 2.0}}, {{"p", 1.5}, {"d", 4.0}}}),
        eval_comlemma, nullptr});
  push({"kkl_geometric", false, ConstantForm::scale_lhs, "C", {{}}, eval_kkl_geometric,
        nullptr});
  push({"kkl_dichotomy", false, ConstantForm::scale_lhs, "C",
        grid({{{"epsilon", 0.25}}, {{"epsilon", 0.5}}}), eval_kkl_dichotomy, nullptr});
  push({"kkl_index", false, ConstantForm::scale_lhs, "C", {{}}, eval_kkl_index, nullptr});
  push({"stability", false, ConstantForm::scale_lhs, "C2", grid({{{"C1", 1.0}}}),
        eval_stability, nullptr});
  push({"calculus_bound", true, ConstantForm::none, "",
        grid({{{"d", 1.0}, {"t0", 1.1 * std::pow(4.0 * kE, 0.5)}},
              {{"d", 2.0}, {"t0", 2.0 * (4.0 * kE)}},
              {{"d", 3.0}, {"t0", 5.0 * std::pow(4.0 * kE, 1.5)}}}),
        eval_calculus_bound, nullptr});
  push({"tav", true, ConstantForm::none, "",
        grid({{{"delta", 0.0}}, {{"delta", 0.25}}, {{"delta", 0.5}}, {{"delta", 0.75}},
              {{"delta", 1.0}}}),
        eval_tav, nullptr});
  push({"zrr", true, ConstantForm::none, "",
        grid({{{"d", 1.0}}, {{"d", 2.0}}, {{"d", 4.0}}}), eval_zrr, nullptr});
  push({"prrr", true, ConstantForm::none, "",
        grid({{{"p", 1.0}}, {{"p", 1.5}}, {{"p", 2.0}}}), eval_prrr, nullptr});
  push({"cor_ik1", true, ConstantForm::none, "", {{}}, eval_cor_ik1, nullptr});
  push({"curvature_i_negative_control", true, ConstantForm::none, "", {{}},
        eval_curvature_i_negative_control, nullptr});
  return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& def : check_registry()) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

CheckRecord run_check(const std::string& id, const Observable& t, const ParamMap& params,
                      const Tolerances& tol) {
  const CheckDef* def = find_check(id);
  if (def == nullptr) throw std::invalid_argument("run_check: unknown check id '" + id + "'");
  return def->eval(t, params, tol);
}

double safe_constant(const CheckDef& def, double sup_ratio, double margin) {
  switch (def.form) {
    case ConstantForm::scale_rhs:
    case ConstantForm::exp_rate:
      return sup_ratio * margin;
    case ConstantForm::scale_lhs:
      return sup_ratio <= 0.0 ? 0.0 : 1.0 / (sup_ratio * margin);
    case ConstantForm::none:
      return sup_ratio;
  }
  return sup_ratio;
}

std::vector<std::string> constant_check_ids() {
  std::vector<std::string> out;
  for (const auto& def : check_registry()) {
    if (def.form != ConstantForm::none) out.push_back(def.id);
  }
  return out;
}

EstimateResult estimate_constant(const std::string& id, const EnsembleSpec& ensemble,
                                 const ParamMap& params) {
  const CheckDef* def = find_check(id);
  if (def == nullptr) {
    throw std::invalid_argument("estimate_constant: unknown check id '" + id + "'");
  }
  const std::vector<Instance> instances = make_ensemble(ensemble);
  EstimateResult result;
  result.records.resize(instances.size());
  std::vector<std::optional<double>> ratios(instances.size());

  ParamMap eval_params = params;
  if (def->form != ConstantForm::none && !def->constant_name.empty() &&
      !eval_params.contains(def->constant_name)) {
    eval_params[def->constant_name] = 1.0;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(instances.size()); ++i) {
    CheckRecord rec = def->eval(instances[i].obs, eval_params, Tolerances{});
    rec.instance_id = instances[i].id;
    result.records[i] = std::move(rec);
    ratios[i] = def->ratio(instances[i].obs, params);
  }
  double sup = -kPInf;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!ratios[i].has_value()) continue;
    ++result.eligible;
    if (*ratios[i] > sup) {
      sup = *ratios[i];
      result.witness = instances[i].id;
    }
  }
  if (result.eligible == 0) {
    result.sup_ratio = 0.0;
    result.note = "no eligible instances after precondition filtering";
  } else {
    result.sup_ratio = sup;
  }
  return result;
}

}  // namespace qhc
