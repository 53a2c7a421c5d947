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

#include "qhc/scaffold.hpp"

#include <stdexcept>
#include <string>

namespace qhc {

namespace {

void require_site(const Observable& t, int site, const char* what) {
  if (site < 0 || site >= t.sites()) {
    throw std::invalid_argument(std::string(what) + ": site out of range");
  }
}

PauliIndex append_digit(const PauliIndex& s, std::uint8_t digit) {
  PauliIndex out = s;
  out.push_back(digit);
  return out;
}

PauliIndex moved_index(const PauliIndex& s, int site) {
  PauliIndex out = s;
  out.push_back(s[site]);
  out[site] = 0;
  return out;
}

}  // namespace

LiftedObservable lift(const Observable& t) {
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) terms.emplace(append_digit(s, 0), c);
  return LiftedObservable{Observable::from_terms(t.sites() + 1, std::move(terms)), t.sites(),
                          "lift"};
}

LiftedObservable move_to_last(const Observable& t, int site) {
  require_site(t, site, "move_to_last");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) terms.emplace(moved_index(s, site), c);
  return LiftedObservable{Observable::from_terms(t.sites() + 1, std::move(terms)), t.sites(),
                          "move_to_last"};
}

LiftedObservable build_tj(const Observable& t, SiteSubset j_set, int site, int d) {
  require_site(t, site, "build_tj");
  if (!j_set.contains(site)) throw std::invalid_argument("build_tj: site must lie in J");
  if (d < 1) throw std::invalid_argument("build_tj: d must be >= 1");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [u, c] : t.terms()) {
    if (u[site] == 0 || support_size(u) != d) continue;
    bool rest_in_complement = true;
    for (int j = 0; j < t.sites() && rest_in_complement; ++j) {
      if (j != site && u[j] != 0 && j_set.contains(j)) rest_in_complement = false;
    }
    if (!rest_in_complement) continue;
    terms.emplace(moved_index(u, site), c);
  }
  return LiftedObservable{Observable::from_terms(t.sites() + 1, std::move(terms)), t.sites(),
                          "tj"};
}

LiftedObservable build_tcopy(const Observable& t, int site) {
  require_site(t, site, "build_tcopy");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    terms.emplace(s[site] == 0 ? append_digit(s, 0) : moved_index(s, site), c);
  }
  return LiftedObservable{Observable::from_terms(t.sites() + 1, std::move(terms)), t.sites(),
                          "tcopy"};
}

LiftedObservable build_ttilde(const Observable& t, int site) {
  require_site(t, site, "build_ttilde");
  std::map<PauliIndex, Complex> terms;
  for (const auto& [s, c] : t.terms()) {
    terms.emplace(append_digit(s, s[site]), c);
  }
  return LiftedObservable{Observable::from_terms(t.sites() + 1, std::move(terms)), t.sites(),
                          "ttilde"};
}

LiftedObservable build_aj(int n, int site) {
  if (site < 0 || site >= n) throw std::invalid_argument("build_aj: site out of range");
  Observable out(n + 1);
  for (std::uint8_t alpha = 1; alpha <= 3; ++alpha) {
    PauliIndex s(n + 1, 0);
    s[site] = alpha;
    out.set_coeff(s, Complex{1.0, 0.0});
  }
  return LiftedObservable{std::move(out), n, "aj"};
}

}  // namespace qhc
