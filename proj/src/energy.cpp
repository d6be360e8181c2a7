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

#include "charsum/energy.hpp"

#include <algorithm>
#include <cmath>

namespace charsum {

namespace {

constexpr u64 kOracleLimit = 200;
constexpr u64 kFastPairBudget = u64(1) << 30;

const Field& field_of(const std::vector<FieldElement>& A) {
  if (A.empty()) fail(ErrorCode::ConditionNotMet, "empty set");
  return *A.front().field;
}

void require_zero_free(const std::vector<FieldElement>& A, const char* who) {
  for (const auto& x : A)
    if (x.is_zero()) fail(ErrorCode::ZeroDivisor, std::string(who) + ": 0 in set");
}

}  // namespace

EnergyResult energy_oracle(const std::vector<FieldElement>& A) {
  const Field& f = field_of(A);
  if (A.size() > kOracleLimit)
    fail(ErrorCode::TooLargeForOracle, "oracle limited to 200 elements");
  require_zero_free(A, "energy_oracle");
  std::vector<u64> member;
  member.reserve(A.size());
  for (const auto& x : A) member.push_back(x.encode());
  std::sort(member.begin(), member.end());
  u128 count = 0;
  for (const auto& x1 : A) {
    for (const auto& x2 : A) {
      FieldElement prod = f.mul(x1, x2);
      for (const auto& x3 : A) {
        FieldElement x4 = f.mul(prod, f.inv(x3));
        if (std::binary_search(member.begin(), member.end(), x4.encode()))
          ++count;
      }
    }
  }
  return {static_cast<u64>(count), A.size(), "oracle"};
}

EnergyResult energy_fast(const std::vector<FieldElement>& A) {
  const Field& f = field_of(A);
  require_zero_free(A, "energy_fast");
  u128 pairs = static_cast<u128>(A.size()) * A.size();
  if (pairs > kFastPairBudget)
    fail(ErrorCode::MemoryBudgetExceeded, "|A|^2 exceeds the pair budget");
  // r(v) for all products, then sum r(v)^2; counts indexed by encoding
  // when that fits memory, hashed otherwise.
  u128 total = 0;
  if (f.q() <= (u64(1) << 22)) {
    std::vector<u32> counts(f.q(), 0);
    for (const auto& x1 : A)
      for (const auto& x2 : A) ++counts[f.mul(x1, x2).encode()];
    for (u64 c : counts) total += static_cast<u128>(c) * c;
  } else {
    std::unordered_map<u64, u64> counts;
    counts.reserve(A.size() * 2);
    for (const auto& x1 : A)
      for (const auto& x2 : A) ++counts[f.mul(x1, x2).encode()];
    for (const auto& [v, c] : counts) total += static_cast<u128>(c) * c;
  }
  if (total >= (u128(1) << 63)) fail(ErrorCode::TooLarge, "energy overflow");
  return {static_cast<u64>(total), A.size(), "fast"};
}

RepCounts ratio_rep_counts(const std::vector<FieldElement>& A,
                           const std::vector<FieldElement>& B) {
  const Field& f = field_of(A);
  require_zero_free(B, "ratio_rep_counts divisor set");
  RepCounts nu;
  for (const auto& y : B) {
    FieldElement inv_y = f.inv(y);
    for (const auto& x : A) ++nu[f.mul(x, inv_y).encode()];
  }
  return nu;
}

namespace {

BoundReport energy_report(const BoxDomain& box, const char* tag) {
  const Field& f = *box.field;
  BoundReport rep;
  rep.theorem = tag;
  rep.p = f.p();
  rep.n = f.n();
  rep.modulus = f.modulus_string();
  rep.box = box.to_string();
  return rep;
}

}  // namespace

BoundReport check_chang_energy(const BoxDomain& box) {
  const Field& f = *box.field;
  BoundReport rep = energy_report(box, "chang_energy");
  double gate = 0.5 * (std::sqrt(static_cast<double>(f.p())) - 1.0);
  u64 max_h = *std::max_element(box.sides.begin(), box.sides.end());
  if (static_cast<double>(max_h) >= gate) {
    rep.holds = Holds::NA;
    return rep;
  }
  EnergyResult e = energy_fast(box_elements(box));
  double card = static_cast<double>(box.cardinality());
  rep.lhs = static_cast<double>(e.count);
  rep.rhs = std::pow(std::pow(2.0, 2.25), f.n()) *
            std::log(static_cast<double>(f.p())) * std::pow(card, 2.75);
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
  rep.holds = rep.lhs < rep.rhs ? Holds::True : Holds::False;
  return rep;
}

BoundReport check_konyagin_energy(const BoxDomain& box) {
  const Field& f = *box.field;
  BoundReport rep = energy_report(box, "konyagin_energy");
  u64 h = box.sides[0];
  bool equal = std::all_of(box.sides.begin(), box.sides.end(),
                           [&](u64 s) { return s == h; });
  if (!equal ||
      static_cast<double>(h) > std::sqrt(static_cast<double>(f.p()))) {
    rep.holds = Holds::NA;
    return rep;
  }
  EnergyResult e = energy_fast(box_elements(box));
  double card = static_cast<double>(box.cardinality());
  rep.lhs = static_cast<double>(e.count);
  rep.rhs = card * card * std::log(static_cast<double>(f.p()));
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
  rep.holds = Holds::NA;  // implied constant unspecified: ratio only
  return rep;
}

}  // namespace charsum
