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

#ifndef QHC_ENSEMBLES_HPP
#define QHC_ENSEMBLES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qhc/observable.hpp"

namespace qhc {

/// Declarative description of an instance family. Identical specs always
/// produce identical instances; draws use one stream per (seed, index), so
/// generation may run in parallel.
///
/// kinds and their params:
///   pauli_string      s (digit list; random nonzero word when absent)
///   classical         name in {dictator, parity, majority, tribes};
///                     k (parity width), w (tribe width)
///   subcube           k (codimension, 1 <= k <= n)
///   random_projection rank (1 <= rank <= 2^n)
///   random_boolean    rank (projection rank before 2P - 1)
///   random_contraction  (none)
///   random_low_degree d (degree cap)
///   remark_p2           (none)
struct EnsembleSpec {
  std::string kind;
  int n = 1;
  std::uint64_t seed = 0;
  int count = 1;
  std::map<std::string, double> params;
  std::string classical_name;          // kind == classical
  std::vector<std::uint8_t> digits;    // kind == pauli_string, optional

  std::string describe() const;
};

struct Instance {
  Observable obs;
  std::string id;
};

std::vector<Instance> make_ensemble(const EnsembleSpec& spec);
Instance make_instance(const EnsembleSpec& spec, int index);

/// Walsh coefficients of f on {-1,1}^n (index = bitmask of the monomial);
/// f is evaluated with x_j = +1 when bit j of the point is 0.
std::vector<double> walsh_coefficients(int n, const std::function<double(std::uint32_t)>& f);

/// Diagonal embedding: Walsh monomial S becomes the word with digit 1 on S.
Observable embed_classical(int n, const std::vector<double>& walsh);

double classical_value(const std::string& name, int n, const std::map<std::string, double>& params,
                       std::uint32_t point);

}  // namespace qhc

#endif
