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

#include "charsum/characters.hpp"

namespace charsum {

MultChar make_mult_char(const FieldPtr& field, u64 e) {
  MultChar chi;
  chi.field = field;
  chi.exponent = e % (field->q() - 1);
  chi.order = (field->q() - 1) / std::gcd(chi.exponent, field->q() - 1);
  return chi;
}

Complex eval_mult_char(const MultChar& chi, const FieldElement& x) {
  if (x.is_zero()) return {0.0, 0.0};
  if (chi.exponent == 0) return {1.0, 0.0};
  const Field& f = *chi.field;
  u64 idx = mulmod(chi.exponent, f.dlog(x), f.q() - 1);
  return f.root_q1(idx);
}

Complex eval_add_char(const AddCharParam& a, const FieldElement& x) {
  const Field& f = *x.field;
  u64 t = f.trace(f.mul(a.a, x));
  return f.root_p(t);
}

Complex gauss_sum(const MultChar& chi, const AddCharParam& a) {
  const Field& f = *chi.field;
  ComplexKahan acc;
  for (u64 enc = 1; enc < f.q(); ++enc) {
    FieldElement x = f.from_encoding(enc);
    acc.add(eval_mult_char(chi, x) * eval_add_char(a, x));
  }
  return acc.value();
}

bool is_principal_on_subfield(const MultChar& chi, u32 k) {
  const Field& f = *chi.field;
  if (k == 0 || f.n() % k != 0)
    fail(ErrorCode::NotASubfield, "k must divide n");
  u64 sub_order = 1;
  for (u32 i = 0; i < k; ++i) sub_order *= f.p();
  --sub_order;  // p^k - 1
  return chi.exponent % sub_order == 0;
}

GaussSumEvaluator::GaussSumEvaluator(FieldPtr field) : field_(std::move(field)) {
  const Field& f = *field_;
  gen_powers_.reserve(f.q() - 1);
  FieldElement acc = f.one();
  for (u64 j = 0; j + 1 < f.q(); ++j) {
    gen_powers_.push_back(acc);
    acc = f.mul(acc, f.generator());
  }
  psi_idx_.assign(f.q() - 1, 0);
}

void GaussSumEvaluator::set_twist(const FieldElement& a) {
  const Field& f = *field_;
  // a*g^j incrementally: one field multiplication per step.
  FieldElement cur = a;
  for (u64 j = 0; j + 1 < f.q(); ++j) {
    psi_idx_[j] = static_cast<u32>(f.trace(cur));
    cur = f.mul(cur, f.generator());
  }
}

Complex GaussSumEvaluator::sum(u64 chi_exponent) const {
  const Field& f = *field_;
  const u64 ord = f.q() - 1;
  const u64 e = chi_exponent % ord;
  f.root_p(0);  // force root tables
  ComplexKahan acc;
  u64 idx = 0;
  for (u64 j = 0; j < ord; ++j) {
    acc.add(f.root_q1(idx) * f.root_p(psi_idx_[j]));
    idx += e;
    if (idx >= ord) idx -= ord;
  }
  return acc.value();
}

}  // namespace charsum
