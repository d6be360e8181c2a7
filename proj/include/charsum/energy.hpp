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

#include <string>
#include <unordered_map>
#include <vector>

#include "charsum/box.hpp"
#include "charsum/report.hpp"

namespace charsum {

struct EnergyResult {
  u64 count = 0;     // |{(x1,x2,x3,x4) in A^4 : x1 x2 = x3 x4}|, exact
  u64 set_size = 0;
  std::string algorithm;  // "oracle" | "fast"
};

// map element encoding -> representation count
using RepCounts = std::unordered_map<u64, u64>;

// Exact quadruple count by triple loop with x4 solved. 0 must not be in A.
// TooLargeForOracle above 200 elements.
EnergyResult energy_oracle(const std::vector<FieldElement>& A);

// Same count via r(v) = #{(x1,x2) : x1 x2 = v} and sum of r(v)^2.
// MemoryBudgetExceeded when |A|^2 does not fit the budget.
EnergyResult energy_fast(const std::vector<FieldElement>& A);

// nu(u) = #{(x,y) in A x B : x/y = u}. ZeroDivisor when 0 is in B.
RepCounts ratio_rep_counts(const std::vector<FieldElement>& A,
                           const std::vector<FieldElement>& B);

// E(B) < (2^{9/4})^n (ln p) |B|^{11/4}, asserted, gated on
// max_j H_j < (sqrt(p) - 1)/2; not-applicable when the gate fails.
BoundReport check_chang_energy(const BoxDomain& box);

// E(B) against |B|^2 ln p, ratio only (implied constant unspecified);
// gated on equal sides with H <= sqrt(p).
BoundReport check_konyagin_energy(const BoxDomain& box);

}  // namespace charsum
