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

#ifndef QHC_SCAFFOLD_HPP
#define QHC_SCAFFOLD_HPP

#include <string>

#include "qhc/hypercube.hpp"
#include "qhc/observable.hpp"

namespace qhc {

// One-site extensions used to split a derivative into an appended working
// site. All constructions are coefficient-exact; their identities are
// regression-tested.

/// Observable on n+1 sites tagged with its source size and construction kind.
struct LiftedObservable {
  Observable obs;
  int source_sites = 0;
  std::string kind;
};

/// Appends digit 0 to every word (T tensor the 2x2 identity).
LiftedObservable lift(const Observable& t);

/// Moves the digit at `site` to the appended last position, zeroing the
/// original slot. An isometry for every L_p.
LiftedObservable move_to_last(const Observable& t, int site);

/// Words u with u_site != 0, |supp(u)| = d and supp(u) \ {site} inside J^c,
/// re-keyed to carry the site digit on the appended position.
LiftedObservable build_tj(const Observable& t, SiteSubset j_set, int site, int d);

/// Terms with zero site digit lifted; the rest moved to the last position.
LiftedObservable build_tcopy(const Observable& t, int site);

/// Terms with zero site digit lifted; the rest duplicated onto the appended
/// position while keeping the site digit.
LiftedObservable build_ttilde(const Observable& t, int site);

/// sigma_1 + sigma_2 + sigma_3 at `site`, as an element on n+1 sites.
LiftedObservable build_aj(int n, int site);

}  // namespace qhc

#endif
