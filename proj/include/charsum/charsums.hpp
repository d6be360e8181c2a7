// Copyright 2026 the charsum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "charsum/box.hpp"
#include "charsum/characters.hpp"
#include "charsum/report.hpp"

namespace charsum {

struct SumResult {
  Complex value{0.0, 0.0};
  double magnitude = 0.0;
  u64 term_count = 0;
  // provenance
  u64 p = 0;
  u32 n = 0;
  u64 chi_exponent = 0;
  u64 twist_encoding = 0;
  std::string box;
};

// Polynomial f(u) = prod (u + z_i)^{m_i} given by its distinct roots -z_i
// and multiplicities; chi(f(u)) is evaluated through exponent arithmetic
// so multiplicities like q-2 cost nothing extra.
struct RootMultiset {
  std::vector<std::pair<FieldElement, u64>> roots;

  u64 distinct_count() const { return roots.size(); }
};

struct BoundedSum {
  SumResult sum;
  double rhs = 0.0;
  bool holds = false;
};

// Sum over the box of chi(x) psi_a(x), compensated summation in
// lexicographic coordinate order.
SumResult partial_gauss_sum(const MultChar& chi, const AddCharParam& a,
                            const BoxDomain& box);

// Sum over F_q of chi(f(x)) with the Weil right-hand side (m-1) sqrt(q).
// IsDthPower when every multiplicity is divisible by the order of chi.
BoundedSum weil_sum(const MultChar& chi, const RootMultiset& f);

// Sum over t in F_p of chi(g + t) e_p(a t) with right-hand side n sqrt(p).
// NotGenerating when g lies in a proper subfield.
BoundedSum ps_sum(const MultChar& chi, const FieldElement& g, u64 a);

// Completion-method bound |S| <= sqrt(q) (1 + ln p)^n, asserted.
BoundReport polya_vinogradov_check(const MultChar& chi, const AddCharParam& a,
                                   const BoxDomain& box);

}  // namespace charsum
