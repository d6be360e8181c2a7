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

#include "charsum/charsums.hpp"

namespace charsum {

// All right-hand sides use natural logarithms.

// H^{1-1/r} p^{(r+1)/(4 r^2)} ln p, r >= 1 (pure-sum Burgess shape).
double rhs_burgess_pure(double H, double p, u64 r);

// H^{1-1/r} p^{1/(4(r-1))} (ln p)^2, r >= 2 (mixed-sum shape); RTooSmall.
double rhs_burgess_mixed(double H, double p, u64 r);

// |B| p^{-eps^2/2}, 0 < eps <= 1/4; EpsOutOfRange.
double rhs_thm7(double card_B, double p, double eps);

// (H p^{-delta})^n (pure-sum baseline, delta supplied by the caller).
double rhs_dl_thm2(double H, double p, u32 n, double delta);

// |B| p^{-tau} (pure-sum baseline, tau supplied by the caller).
double rhs_chang_thm3(double card_B, double p, double tau);

// Generic branch of the box-sum estimate: |B| p^{-tau}, tau = eps^2/4.
double rhs_thm6(double card_B, double p, double tau);

// --- report builders (ratio rows; asymptotic statements never asserted) ---

BoundReport report_burgess_pure(const MultChar& chi, const BoxDomain& box, u64 r);
BoundReport report_burgess_mixed(const MultChar& chi, const AddCharParam& a,
                                 const BoxDomain& box, u64 r);
BoundReport report_dl(const MultChar& chi, const BoxDomain& box, double delta,
                      double eps);
BoundReport report_chang3(const MultChar& chi, const BoxDomain& box, double tau,
                          double eps);

// Mixed box sum against |B| p^{-tau} with tau = eps^2/4; when n is even
// and chi is principal on the index-2 subfield the exceptional branch
// adds max_xi |B ∩ xi F_2|. Hypothesis prod H_j >= p^{(2/5+eps)n} gates
// the row (not-applicable otherwise).
BoundReport report_thm6(const MultChar& chi, const AddCharParam& a,
                        const BoxDomain& box, double eps);

// Mixed box sum against |B| p^{-eps^2/2}; needs n >= 2 and
// H_j >= p^{1/4+eps} for all j.
BoundReport report_thm7(const MultChar& chi, const AddCharParam& a,
                        const BoxDomain& box, double eps);

BoundReport report_weil(const MultChar& chi, const RootMultiset& f);
BoundReport report_ps(const MultChar& chi, const FieldElement& g, u64 a);

}  // namespace charsum
