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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// binary fails if any criterion fails.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhc/checks.hpp"
#include "qhc/dense.hpp"
#include "qhc/ensembles.hpp"
#include "qhc/harness.hpp"
#include "qhc/hypercube.hpp"
#include "qhc/io.hpp"
#include "qhc/kernels.hpp"
#include "qhc/rng.hpp"
#include "qhc/scaffold.hpp"
#include "qhc/subsets.hpp"

using namespace qhc;
using Clock = std::chrono::steady_clock;

namespace {

void report(int number, const char* label, bool pass, const std::string& detail = "") {
  std::printf("[criterion %2d] %s  %s%s%s\n", number, pass ? "PASS" : "FAIL", label,
              detail.empty() ? "" : " | ", detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(pass, label, ": ", detail);
}

Observable random_sparse(int n, int terms, Rng& rng) {
  Observable out(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (int k = 0; k < terms; ++k) {
    out.add_coeff(kernels::decode_index(rng.below(total), n),
                  Complex{rng.normal(), rng.normal()});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path out_root() {
  auto path = std::filesystem::temp_directory_path() / "qhc_acceptance";
  std::filesystem::create_directories(path);
  return path;
}

}  // namespace

TEST_CASE("criterion 1: Fourier round trip and Parseval") {
  const auto t0 = Clock::now();
  Rng rng(1001);
  double worst_round = 0.0;
  double worst_parseval = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Observable t = random_sparse(n, 4 + static_cast<int>(rng.below(28)), rng);
    const DenseOperator m = synthesize(t);
    worst_round = std::max(worst_round, max_coeff_deviation(analyze(m), t));
    const double coeff_side = norm2_squared(t);
    const double dense_side = std::pow(schatten_norm(m, 2.0), 2);
    worst_parseval = std::max(worst_parseval, std::abs(coeff_side - dense_side));
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream detail;
  detail << "round=" << worst_round << " parseval=" << worst_parseval << " time=" << seconds
         << "s";
  report(1, "round trip + Parseval over 200 random elements, n in 1..6",
         worst_round <= 1e-10 && worst_parseval <= 1e-10 && seconds < 30.0, detail.str());
}

TEST_CASE("criterion 2: subset-average identity by full enumeration") {
  Rng rng(1002);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (double delta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (int rep = 0; rep < 3; ++rep) {
        const Observable t = random_sparse(n, 6 + static_cast<int>(rng.below(10)), rng);
        const CheckRecord rec = check_tav(t, delta);
        worst = std::max(worst, rec.lhs);
      }
    }
  }
  report(2, "delta^L vs enumerated subset average, n in 1..4", worst <= 1e-12,
         "max coefficient deviation=" + format_double(worst));
}

TEST_CASE("criterion 3: diagonal embedding regression values") {
  bool ok = true;
  std::ostringstream detail;
  for (int n : {2, 4, 8}) {
    const Observable f = make_instance({"remark_p2", n, 0, 1, {}, "", {}}, 0).obs;
    const double var = variance_coeff(f);
    const double total = total_influence(f, 2.0);
    ok = ok && std::abs(var - 0.25 / n) <= 1e-12;
    ok = ok && std::abs(total - 0.25 / n) <= 1e-12;
    for (int j = 0; j < n; ++j) {
      ok = ok && std::abs(influence(f, j, 2.0) - 0.25 / (n * n)) <= 1e-12;
    }
    detail << "n=" << n << ":var=" << format_double(var) << " ";
  }
  report(3, "var = Inf = 1/(4n), Inf_j = 1/(4n^2) for n in {2,4,8}", ok, detail.str());
}

namespace {

std::vector<EnsembleSpec> suite_ensembles() {
  std::vector<EnsembleSpec> specs;
  // pauli strings
  specs.push_back({"pauli_string", 3, 21, 15, {}, "", {}});
  specs.push_back({"pauli_string", 5, 22, 15, {}, "", {}});
  // classical embeddings
  specs.push_back({"classical", 2, 0, 1, {}, "dictator", {}});
  specs.push_back({"classical", 5, 0, 1, {}, "dictator", {}});
  specs.push_back({"classical", 5, 0, 1, {{"k", 3}}, "parity", {}});
  specs.push_back({"classical", 2, 0, 1, {{"k", 2}}, "parity", {}});
  specs.push_back({"classical", 5, 0, 1, {}, "majority", {}});
  specs.push_back({"classical", 4, 0, 1, {{"w", 2}}, "tribes", {}});
  // subcubes
  specs.push_back({"subcube", 2, 0, 1, {{"k", 1}}, "", {}});
  specs.push_back({"subcube", 3, 0, 1, {{"k", 2}}, "", {}});
  specs.push_back({"subcube", 4, 0, 1, {{"k", 2}}, "", {}});
  specs.push_back({"subcube", 4, 0, 1, {{"k", 4}}, "", {}});
  specs.push_back({"subcube", 5, 0, 1, {{"k", 3}}, "", {}});
  specs.push_back({"subcube", 6, 0, 1, {{"k", 1}}, "", {}});
  specs.push_back({"subcube", 6, 0, 1, {{"k", 6}}, "", {}});
  // Haar projections
  specs.push_back({"random_projection", 3, 23, 10, {{"rank", 1}}, "", {}});
  specs.push_back({"random_projection", 3, 24, 10, {{"rank", 2}}, "", {}});
  specs.push_back({"random_projection", 3, 25, 10, {{"rank", 4}}, "", {}});
  specs.push_back({"random_projection", 4, 26, 10, {{"rank", 2}}, "", {}});
  specs.push_back({"random_projection", 4, 27, 10, {{"rank", 8}}, "", {}});
  specs.push_back({"random_projection", 5, 28, 10, {{"rank", 1}}, "", {}});
  specs.push_back({"random_projection", 5, 29, 10, {{"rank", 16}}, "", {}});
  specs.push_back({"random_projection", 6, 30, 6, {{"rank", 32}}, "", {}});
  // quantum booleans
  specs.push_back({"random_boolean", 3, 31, 15, {{"rank", 4}}, "", {}});
  specs.push_back({"random_boolean", 4, 32, 15, {{"rank", 8}}, "", {}});
  specs.push_back({"random_boolean", 5, 33, 10, {{"rank", 16}}, "", {}});
  specs.push_back({"random_boolean", 2, 34, 15, {{"rank", 2}}, "", {}});
  // bounded contractions
  specs.push_back({"random_contraction", 2, 35, 40, {}, "", {}});
  specs.push_back({"random_contraction", 3, 36, 60, {}, "", {}});
  specs.push_back({"random_contraction", 4, 37, 50, {}, "", {}});
  specs.push_back({"random_contraction", 5, 38, 30, {}, "", {}});
  specs.push_back({"random_contraction", 6, 39, 10, {}, "", {}});
  // low degree
  specs.push_back({"random_low_degree", 4, 40, 30, {{"d", 1}}, "", {}});
  specs.push_back({"random_low_degree", 4, 41, 30, {{"d", 2}}, "", {}});
  specs.push_back({"random_low_degree", 4, 42, 25, {{"d", 3}}, "", {}});
  specs.push_back({"random_low_degree", 6, 43, 25, {{"d", 1}}, "", {}});
  specs.push_back({"random_low_degree", 6, 44, 25, {{"d", 2}}, "", {}});
  // the diagonal counterexample family
  specs.push_back({"remark_p2", 2, 0, 1, {}, "", {}});
  specs.push_back({"remark_p2", 4, 0, 1, {}, "", {}});
  specs.push_back({"remark_p2", 6, 0, 1, {}, "", {}});
  return specs;
}

}  // namespace

TEST_CASE("criterion 4: unconditional inequality suite") {
  const auto t0 = Clock::now();
  RunConfig config;
  config.output = (out_root() / "criterion4").string();
  config.seed = 4;
  for (const char* id :
       {"poincare", "log_sobolev", "modified_log_sobolev", "buser", "local_reverse_poincare",
        "gradient_estimate", "curvature_i", "curvature_ii", "curvature_iii",
        "fundamental_identity", "high_degree", "moment_comparison", "hypercontractivity_sample",
        "paley_zygmund", "prrr", "cor_ik1", "zrr", "lehd", "dgood", "comlemma",
        "main_spectral"}) {
    config.checks.push_back({id, {}, false});
  }
  config.ensembles = suite_ensembles();

  int instances = 0;
  for (const auto& spec : config.ensembles) instances += spec.count;

  const int exit_code = run_verify(config, std::cout);
  int violated = 0;
  std::string first_violation;
  std::istringstream records(read_file(config.output + "/records.jsonl"));
  std::string line;
  std::int64_t total = 0;
  while (std::getline(records, line)) {
    ++total;
    if (line.find("\"status\": \"violated\"") != std::string::npos) {
      ++violated;
      if (first_violation.empty()) first_violation = line.substr(0, 160);
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream detail;
  detail << instances << " instances, " << total << " records, " << violated
         << " violations, time=" << seconds << "s";
  if (!first_violation.empty()) detail << " first=" << first_violation;
  report(4, "zero violations across the unconditional suite",
         exit_code == 0 && violated == 0 && instances >= 500 && seconds < 600.0, detail.str());
}

TEST_CASE("criterion 5: gated spectrum bounds (kk18, key_prop)") {
  bool ok = true;
  int evaluated = 0;
  std::ostringstream detail;
  // Subcube projections with k = n in {3,4,5}: M = k 4^-k <= e^-2.
  for (int k : {3, 4, 5}) {
    const Observable t =
        make_instance({"subcube", k, 0, 1, {{"k", static_cast<double>(k)}}, "", {}}, 0).obs;
    const CheckRecord kk = run_check("kk18", t, {{"d", 1.0}});
    ok = ok && kk.status == CheckStatus::holds;
    ++evaluated;
    for (std::uint32_t mask : {1u, (1u << (k / 2)) - 1u, (1u << k) - 1u}) {
      if (mask == 0) continue;
      const CheckRecord kp =
          run_check("key_prop", t, {{"d", 1.0}, {"J_mask", static_cast<double>(mask)}});
      ok = ok && kp.status != CheckStatus::violated;
      evaluated += kp.status == CheckStatus::holds ? 1 : 0;
    }
  }
  // Random projections that pass the mass gate.
  int gated_in = 0;
  for (int rank : {1, 2}) {
    EnsembleSpec spec{"random_projection", 5, static_cast<std::uint64_t>(50 + rank), 20,
                      {{"rank", static_cast<double>(rank)}}, "", {}};
    for (const auto& instance : make_ensemble(spec)) {
      for (int d : {1, 2}) {
        const CheckRecord kk = run_check("kk18", instance.obs, {{"d", static_cast<double>(d)}});
        if (kk.status == CheckStatus::skipped_precondition) continue;
        ok = ok && kk.status != CheckStatus::violated;
        ++gated_in;
        const CheckRecord kp = run_check("key_prop", instance.obs, {{"d", static_cast<double>(d)}});
        if (kp.status != CheckStatus::skipped_precondition) {
          ok = ok && kp.status != CheckStatus::violated;
        }
      }
    }
  }
  detail << "subcube cases=" << evaluated << " random gated-in=" << gated_in;
  report(5, "kk18/key_prop hold wherever M(T) <= e^{-2d}", ok && gated_in > 0, detail.str());
}

TEST_CASE("criterion 6: scaffold identities on random tuples") {
  Rng rng(1006);
  double worst_cjc = 0.0;
  double worst_l1 = 0.0;
  double worst_tj = 0.0;
  int tj_checked = 0;
  int tuples = 0;
  while (tj_checked < 100 && tuples < 600) {
    ++tuples;
    const int n = 2 + static_cast<int>(rng.below(4));  // 2..5 sites
    Observable t(n);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (int k = 0; k < 16; ++k) {
      t.add_coeff(kernels::decode_index(rng.below(total), n), Complex{rng.normal(), 0.0});
    }
    const std::uint32_t full = (1u << n) - 1u;
    const SiteSubset j_set =
        SiteSubset::from_mask(n, static_cast<std::uint32_t>(rng.below(full)) + 1u);
    const auto members = j_set.members();
    const int j = members[rng.below(members.size())];
    const int d = 1 + static_cast<int>(rng.below(3));

    SiteSubset lifted_keep = SiteSubset::empty(n + 1);
    for (int site = 0; site < n; ++site) {
      if (!j_set.contains(site)) lifted_keep.mask |= (1u << site);
    }
    lifted_keep.mask |= (1u << n);

    const Observable aj_tilde = multiply(build_aj(n, j).obs, build_ttilde(t, j).obs);
    const Observable left = conditional_expectation(aj_tilde, lifted_keep);
    const Observable right =
        conditional_expectation(partial_derivative(build_tcopy(t, j).obs, n), lifted_keep);
    worst_cjc = std::max(worst_cjc, max_coeff_deviation(left, right));

    const Observable moved = partial_derivative(build_tcopy(t, j).obs, n);
    const Observable direct = partial_derivative(t, j);
    const double moved_l1 = moved.is_zero() ? 0.0 : schatten_norm(synthesize(moved), 1.0);
    const double direct_l1 = direct.is_zero() ? 0.0 : schatten_norm(synthesize(direct), 1.0);
    worst_l1 = std::max(worst_l1, std::abs(moved_l1 - direct_l1));

    const Observable tj = build_tj(t, j_set, j, d).obs;
    const double mass = norm2_squared(tj);
    if (mass >= 1e-12) {
      ++tj_checked;
      const Observable tbar = scale(tj, Complex{1.0 / std::sqrt(mass), 0.0});
      const Complex pairing = trace(multiply(tbar, aj_tilde));
      worst_tj = std::max(worst_tj, std::abs(pairing.real() * pairing.real() - mass) +
                                        std::abs(pairing.imag()));
    }
  }
  std::ostringstream detail;
  detail << "cjc=" << worst_cjc << " moved-L1=" << worst_l1 << " tj=" << worst_tj
         << " tuples=" << tuples << " tj_checked=" << tj_checked;
  report(6, "lifted-site identities on 100 random (T, J, j, d) tuples",
         worst_cjc <= 1e-9 && worst_l1 <= 1e-9 && worst_tj <= 1e-9 && tj_checked >= 100,
         detail.str());
}

TEST_CASE("criterion 7: constant estimation sanity") {
  bool ok = true;
  std::ostringstream detail;

  // Poincare over degree-one instances.
  const EstimateResult poincare =
      estimate_constant("poincare", {"random_low_degree", 4, 71, 50, {{"d", 1}}, "", {}});
  ok = ok && std::abs(poincare.sup_ratio - 1.0) <= 1e-9;
  detail << "poincare=" << format_double(poincare.sup_ratio);

  // Balanced dictator: minimal Eldan-Gross constant (closed form sqrt(ln 5)/2).
  const EstimateResult dictator =
      estimate_constant("eldan_gross", {"subcube", 3, 0, 1, {{"k", 1}}, "", {}});
  ok = ok && std::abs(dictator.sup_ratio - 0.6345) <= 0.001;
  detail << " dictator_K=" << format_double(dictator.sup_ratio);

  // Stability across seeds over 200 random balanced projections at n = 5.
  for (const char* id : {"isoperimetric", "eldan_gross"}) {
    const EstimateResult a =
        estimate_constant(id, {"random_projection", 5, 701, 200, {{"rank", 16}}, "", {}});
    const EstimateResult b =
        estimate_constant(id, {"random_projection", 5, 702, 200, {{"rank", 16}}, "", {}});
    const bool finite = std::isfinite(a.sup_ratio) && std::isfinite(b.sup_ratio) &&
                        a.sup_ratio > 0 && b.sup_ratio > 0;
    const bool stable =
        std::abs(a.sup_ratio - b.sup_ratio) <= 0.05 * std::max(a.sup_ratio, b.sup_ratio);
    ok = ok && finite && stable;
    detail << " " << id << "=" << format_double(a.sup_ratio) << "/"
           << format_double(b.sup_ratio);
  }
  report(7, "estimated constants: exact values and seed stability", ok, detail.str());
}

TEST_CASE("criterion 8: tail integral bound by quadrature") {
  bool ok = true;
  std::ostringstream detail;
  for (int d : {1, 2, 3}) {
    for (double factor : {1.1, 2.0, 5.0}) {
      const double t0 = factor * std::pow(4.0 * std::exp(1.0), d / 2.0);
      const CheckRecord rec = run_check("calculus_bound", identity_observable(1),
                                        {{"d", static_cast<double>(d)}, {"t0", t0}});
      ok = ok && rec.status == CheckStatus::holds;
      if (d == 3 && factor == 1.1) {
        detail << "sample lhs=" << format_double(rec.lhs) << " rhs=" << format_double(rec.rhs);
      }
    }
  }
  report(8, "quadrature tail bound, d in {1,2,3}, t0 in {1.1,2,5}x(4e)^{d/2}", ok, detail.str());
}

TEST_CASE("criterion 9: byte-identical records across runs") {
  RunConfig config;
  config.seed = 9;
  config.checks = {{"poincare", {}, false},
                   {"buser", {}, false},
                   {"zrr", {}, false},
                   {"eldan_gross", {}, false}};
  config.ensembles = {{"random_projection", 4, 9, 10, {{"rank", 8}}, "", {}},
                      {"random_contraction", 3, 9, 10, {}, "", {}}};
  RunConfig first = config;
  first.output = (out_root() / "det_a").string();
  RunConfig second = config;
  second.output = (out_root() / "det_b").string();
  std::ostringstream sink;
  const int code_a = run_verify(first, sink);
  const int code_b = run_verify(second, sink);
  const std::string bytes_a = read_file(first.output + "/records.jsonl");
  const std::string bytes_b = read_file(second.output + "/records.jsonl");
  report(9, "two identical verify runs produce byte-identical records.jsonl",
         code_a == code_b && !bytes_a.empty() && bytes_a == bytes_b,
         "bytes=" + std::to_string(bytes_a.size()));
}

TEST_CASE("criterion 10: corrupted checker is reported violated") {
  const Observable fixture =
      make_instance({"subcube", 3, 0, 1, {{"k", 2}}, "", {}}, 0).obs;
  const CheckRecord rec = run_check("curvature_i_negative_control", fixture);
  RunConfig config;
  config.output = (out_root() / "negative_control").string();
  config.checks = {{"curvature_i_negative_control", {}, false}};
  config.ensembles = {{"random_contraction", 3, 10, 1, {}, "", {}}};
  std::ostringstream sink;
  const int exit_code = run_verify(config, sink);
  report(10, "sign-flipped curvature identity is flagged and fails the run",
         rec.status == CheckStatus::violated && exit_code == 1,
         "deviation=" + format_double(rec.lhs));
}

TEST_CASE("trend report: constant-free ratios across n (informational)") {
  // The n-asymptotic statements are not reproducible at desk scale; the
  // suite records the constant-free ratios across n = 2..6 instead.
  RunConfig config;
  config.output = (out_root() / "trend").string();
  config.seed = 11;
  config.checks = {{"kkl_geometric", {}, true},
                   {"kkl_lp", {{"p", 1.0}}, true},
                   {"kkl_index", {}, true},
                   {"dim_free_kkl", {{"p", 1.0}}, true}};
  for (int n = 2; n <= 6; ++n) {
    config.ensembles.push_back({"random_projection", n, 1100 + static_cast<std::uint64_t>(n),
                                20, {{"rank", static_cast<double>(1 << (n - 1))}}, "", {}});
  }
  std::ostringstream log;
  const int code = run_constants(config, log);
  const std::string table = read_file(config.output + "/constants.csv");
  std::printf("%s", table.c_str());
  bool finite = code == 0 && !table.empty();
  std::istringstream lines(table);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const auto second = line.find(',', comma + 1);
    const double value = std::stod(line.substr(comma + 1, second - comma - 1));
    finite = finite && std::isfinite(value);
  }

  // At the constants estimated over the whole n range (x 1.01 safety), no
  // instance may be violated.
  bool no_violation = true;
  for (const auto& request : config.checks) {
    const CheckDef* def = find_check(request.id);
    double sup = 0.0;
    int eligible = 0;
    for (const auto& spec : config.ensembles) {
      const EstimateResult result = estimate_constant(request.id, spec, request.params);
      if (result.eligible > 0) sup = std::max(sup, result.sup_ratio);
      eligible += result.eligible;
    }
    if (eligible == 0) continue;
    ParamMap params = request.params;
    params[def->constant_name] = safe_constant(*def, sup);
    for (const auto& spec : config.ensembles) {
      for (const auto& instance : make_ensemble(spec)) {
        no_violation = no_violation &&
                       run_check(request.id, instance.obs, params).status !=
                           CheckStatus::violated;
      }
    }
  }
  report(11, "trend ratios for n = 2..6 finite; estimated constants violation-free",
         finite && no_violation, "");
}
