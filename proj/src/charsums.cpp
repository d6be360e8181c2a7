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

#include "charsum/charsums.hpp"

#include <cmath>

namespace charsum {

namespace {

constexpr double kBoundSlack = 1e-9;

bool bound_holds(double lhs, double rhs) {
  return lhs <= rhs * (1.0 + kBoundSlack) + kBoundSlack;
}

SumResult finish(ComplexKahan& acc, u64 terms, const MultChar& chi,
                 const AddCharParam* a, const std::string& box) {
  SumResult r;
  r.value = acc.value();
  r.magnitude = std::abs(r.value);
  r.term_count = terms;
  r.p = chi.field->p();
  r.n = chi.field->n();
  r.chi_exponent = chi.exponent;
  r.twist_encoding = a ? a->a.encode() : 0;
  r.box = box;
  return r;
}

}  // namespace

SumResult partial_gauss_sum(const MultChar& chi, const AddCharParam& a,
                            const BoxDomain& box) {
  ComplexKahan acc;
  u64 terms = 0;
  const bool twist_trivial = a.trivial();
  for_each_element(box, [&](const FieldElement& x) {
    Complex v = eval_mult_char(chi, x);
    if (!twist_trivial) v *= eval_add_char(a, x);
    acc.add(v);
    ++terms;
  });
  return finish(acc, terms, chi, &a, box.to_string());
}

BoundedSum weil_sum(const MultChar& chi, const RootMultiset& f) {
  const Field& fld = *chi.field;
  if (f.roots.empty()) fail(ErrorCode::IsDthPower, "empty root multiset");
  const u64 d = chi.order;
  if (d <= 1) fail(ErrorCode::IsDthPower, "trivial character");
  bool all_divisible = true;
  for (std::size_t i = 0; i < f.roots.size(); ++i) {
    const auto& [root, m] = f.roots[i];
    fld.trace(root);  // ownership check
    if (m == 0) fail(ErrorCode::IsDthPower, "zero multiplicity");
    if (m % d != 0) all_divisible = false;
    for (std::size_t j = i + 1; j < f.roots.size(); ++j) {
      if (f.roots[j].first == root)
        fail(ErrorCode::IsDthPower, "roots must be distinct");
    }
  }
  if (all_divisible)
    fail(ErrorCode::IsDthPower, "every multiplicity divisible by ord(chi)");

  const u64 ord = fld.q() - 1;
  ComplexKahan acc;
  for (u64 enc = 0; enc < fld.q(); ++enc) {
    FieldElement x = fld.from_encoding(enc);
    u64 exp_total = 0;
    bool zero_factor = false;
    for (const auto& [root, m] : f.roots) {
      FieldElement u = fld.add(x, root);
      if (u.is_zero()) {
        zero_factor = true;
        break;
      }
      exp_total = addmod(exp_total, mulmod(m % ord, fld.dlog(u), ord), ord);
    }
    if (zero_factor) continue;  // chi(0) = 0 term
    acc.add(fld.root_q1(mulmod(chi.exponent, exp_total, ord)));
  }
  BoundedSum out;
  out.sum = finish(acc, fld.q(), chi, nullptr, "");
  out.rhs = (static_cast<double>(f.distinct_count()) - 1.0) *
            std::sqrt(static_cast<double>(fld.q()));
  out.holds = bound_holds(out.sum.magnitude, out.rhs);
  return out;
}

BoundedSum ps_sum(const MultChar& chi, const FieldElement& g, u64 a) {
  const Field& fld = *chi.field;
  if (!fld.is_generating_element(g))
    fail(ErrorCode::NotGenerating, "g lies in a proper subfield");
  a %= fld.p();
  ComplexKahan acc;
  for (u64 t = 0; t < fld.p(); ++t) {
    FieldElement x = fld.add(g, fld.scalar(t));
    Complex v = eval_mult_char(chi, x);
    v *= fld.root_p(mulmod(a, t, fld.p()));
    acc.add(v);
  }
  BoundedSum out;
  out.sum = finish(acc, fld.p(), chi, nullptr, "");
  out.sum.twist_encoding = a;
  out.rhs = static_cast<double>(fld.n()) * std::sqrt(static_cast<double>(fld.p()));
  out.holds = bound_holds(out.sum.magnitude, out.rhs);
  return out;
}

BoundReport polya_vinogradov_check(const MultChar& chi, const AddCharParam& a,
                                   const BoxDomain& box) {
  if (chi.trivial())
    fail(ErrorCode::ConditionNotMet, "pv bound needs a nontrivial character");
  SumResult s = partial_gauss_sum(chi, a, box);
  const Field& f = *chi.field;
  BoundReport rep;
  rep.theorem = "pv";
  rep.p = f.p();
  rep.n = f.n();
  rep.modulus = f.modulus_string();
  rep.chi_exponent = chi.exponent;
  rep.twist = a.a.encode();
  rep.box = box.to_string();
  rep.lhs = s.magnitude;
  rep.rhs = std::sqrt(static_cast<double>(f.q())) *
            std::pow(1.0 + std::log(static_cast<double>(f.p())), f.n());
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
  rep.holds = bound_holds(rep.lhs, rep.rhs) ? Holds::True : Holds::False;
  return rep;
}

}  // namespace charsum
