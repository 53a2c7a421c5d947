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

#ifndef QHC_IO_HPP
#define QHC_IO_HPP

#include <iosfwd>
#include <string>

#include "qhc/dense.hpp"
#include "qhc/ensembles.hpp"
#include "qhc/observable.hpp"
#include "qhc/record.hpp"

namespace qhc {

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double value);

/// {"n": ..., "terms": [{"s": [...], "re": ..., "im": ...}, ...]} with terms
/// in lexicographic key order (the storage order), so output is byte-stable.
std::string observable_to_json(const Observable& obs);
Observable observable_from_json(const std::string& text);
Observable load_observable(const std::string& path);
void save_observable(const Observable& obs, const std::string& path);

/// Row-major re/im dump for debugging; not a stable interchange format.
std::string dense_to_json(const DenseOperator& m);

std::string record_to_jsonl(const CheckRecord& rec);

EnsembleSpec ensemble_spec_from_json(const std::string& text);
std::string ensemble_spec_to_json(const EnsembleSpec& spec);

}  // namespace qhc

#endif
