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

#include <numeric>
#include <vector>

#include "charsum/field.hpp"
#include "charsum/kahan.hpp"

namespace charsum {

// Multiplicative character chi(g^j) = exp(2*pi*i*e*j/(q-1)), chi(0) = 0.
struct MultChar {
  FieldPtr field;
  u64 exponent = 0;  // reduced mod q-1
  u64 order = 1;     // (q-1)/gcd(e, q-1)

  bool trivial() const { return exponent == 0; }
};

// Twist parameter of the additive character psi_a(z) = e_p(Tr(a z)).
struct AddCharParam {
  FieldElement a;

  bool trivial() const { return a.is_zero(); }
};

MultChar make_mult_char(const FieldPtr& field, u64 e);

Complex eval_mult_char(const MultChar& chi, const FieldElement& x);
Complex eval_add_char(const AddCharParam& a, const FieldElement& x);

// Complete sum over F_q of chi(x) psi_a(x), direct compensated summation
// in encoding order.
Complex gauss_sum(const MultChar& chi, const AddCharParam& a);

// True iff chi restricted to F_{p^k}^* is the principal character,
// equivalently (p^k - 1) | e. NotASubfield when k does not divide n.
bool is_principal_on_subfield(const MultChar& chi, u32 k);

// Precomputed evaluation of complete Gauss sums: one twist at a time,
// reused across every character exponent. The field must carry a dlog
// table. Terms are accumulated over the generator cycle g^0, g^1, ...
class GaussSumEvaluator {
 public:
  explicit GaussSumEvaluator(FieldPtr field);

  void set_twist(const FieldElement& a);

  // Gauss sum of chi with exponent e against the current twist.
  Complex sum(u64 chi_exponent) const;

  // Additive-character values by dlog index: psi_a(g^j).
  const std::vector<u32>& twist_trace_by_dlog() const { return psi_idx_; }

 private:
  FieldPtr field_;
  std::vector<FieldElement> gen_powers_;  // g^j for j < q-1
  std::vector<u32> psi_idx_;              // Tr(a g^j) mod p
};

}  // namespace charsum
