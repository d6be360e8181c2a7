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

#include "charsum/theorems.hpp"

#include <cmath>

namespace charsum {

double rhs_burgess_pure(double H, double p, u64 r) {
  if (r < 1) fail(ErrorCode::RTooSmall, "r must be >= 1");
  double rd = static_cast<double>(r);
  return std::pow(H, 1.0 - 1.0 / rd) *
         std::pow(p, (rd + 1.0) / (4.0 * rd * rd)) * std::log(p);
}

double rhs_burgess_mixed(double H, double p, u64 r) {
  if (r < 2) fail(ErrorCode::RTooSmall, "r must be >= 2");
  double rd = static_cast<double>(r);
  double lg = std::log(p);
  return std::pow(H, 1.0 - 1.0 / rd) * std::pow(p, 1.0 / (4.0 * (rd - 1.0))) *
         lg * lg;
}

double rhs_thm7(double card_B, double p, double eps) {
  if (!(eps > 0.0) || eps > 0.25)
    fail(ErrorCode::EpsOutOfRange, "need 0 < eps <= 1/4");
  return card_B * std::pow(p, -eps * eps / 2.0);
}

double rhs_dl_thm2(double H, double p, u32 n, double delta) {
  return std::pow(H * std::pow(p, -delta), static_cast<double>(n));
}

double rhs_chang_thm3(double card_B, double p, double tau) {
  return card_B * std::pow(p, -tau);
}

double rhs_thm6(double card_B, double p, double tau) {
  return card_B * std::pow(p, -tau);
}

namespace {

BoundReport base_report(const MultChar& chi, const BoxDomain& box,
                        const char* tag) {
  const Field& f = *chi.field;
  BoundReport rep;
  rep.theorem = tag;
  rep.p = f.p();
  rep.n = f.n();
  rep.modulus = f.modulus_string();
  rep.chi_exponent = chi.exponent;
  rep.box = box.to_string();
  return rep;
}

void set_ratio(BoundReport& rep) {
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
}

}  // namespace

BoundReport report_burgess_pure(const MultChar& chi, const BoxDomain& box,
                                u64 r) {
  BoundReport rep = base_report(chi, box, "burgess2");
  rep.r = r;
  AddCharParam trivial{chi.field->zero()};
  rep.lhs = partial_gauss_sum(chi, trivial, box).magnitude;
  rep.rhs = rhs_burgess_pure(static_cast<double>(box.sides[0]),
                             static_cast<double>(rep.p), r);
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_burgess_mixed(const MultChar& chi, const AddCharParam& a,
                                 const BoxDomain& box, u64 r) {
  BoundReport rep = base_report(chi, box, "burgess3");
  rep.r = r;
  rep.twist = a.a.encode();
  rep.lhs = partial_gauss_sum(chi, a, box).magnitude;
  rep.rhs = rhs_burgess_mixed(static_cast<double>(box.sides[0]),
                              static_cast<double>(rep.p), r);
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_dl(const MultChar& chi, const BoxDomain& box, double delta,
                      double eps) {
  BoundReport rep = base_report(chi, box, "dl");
  rep.eps = eps;
  const Field& f = *chi.field;
  u64 h = box.sides[0];
  bool equal = true;
  for (u64 s : box.sides) equal = equal && s == h;
  double gate = std::pow(static_cast<double>(f.p()),
                         static_cast<double>(f.n()) /
                                 (2.0 * (static_cast<double>(f.n()) + 1.0)) +
                             eps);
  if (!equal || !(static_cast<double>(h) > gate)) {
    rep.holds = Holds::NA;
    return rep;
  }
  AddCharParam trivial{f.zero()};
  rep.lhs = partial_gauss_sum(chi, trivial, box).magnitude;
  rep.rhs = rhs_dl_thm2(static_cast<double>(h), static_cast<double>(f.p()),
                        f.n(), delta);
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_chang3(const MultChar& chi, const BoxDomain& box, double tau,
                          double eps) {
  BoundReport rep = base_report(chi, box, "chang3");
  rep.eps = eps;
  const Field& f = *chi.field;
  double prod_h = 1.0;
  for (u64 s : box.sides) prod_h *= static_cast<double>(s);
  double gate = std::pow(static_cast<double>(f.p()),
                         (0.4 + eps) * static_cast<double>(f.n()));
  if (!(prod_h > gate)) {
    rep.holds = Holds::NA;
    return rep;
  }
  AddCharParam trivial{f.zero()};
  rep.lhs = partial_gauss_sum(chi, trivial, box).magnitude;
  rep.rhs = rhs_chang_thm3(prod_h, static_cast<double>(f.p()), tau);
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_thm6(const MultChar& chi, const AddCharParam& a,
                        const BoxDomain& box, double eps) {
  BoundReport rep = base_report(chi, box, "thm6");
  rep.eps = eps;
  rep.twist = a.a.encode();
  const Field& f = *chi.field;
  double prod_h = 1.0;
  for (u64 s : box.sides) prod_h *= static_cast<double>(s);
  double gate = std::pow(static_cast<double>(f.p()),
                         (0.4 + eps) * static_cast<double>(f.n()));
  if (!(prod_h >= gate) || chi.trivial()) {
    rep.holds = Holds::NA;
    return rep;
  }
  double tau = eps * eps / 4.0;
  rep.lhs = partial_gauss_sum(chi, a, box).magnitude;
  rep.rhs = rhs_thm6(prod_h, static_cast<double>(f.p()), tau);
  if (f.n() % 2 == 0 && is_principal_on_subfield(chi, f.n() / 2)) {
    CosetMax cm = max_coset_intersection(box, f.n() / 2);
    rep.rhs += static_cast<double>(cm.count);
  }
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_thm7(const MultChar& chi, const AddCharParam& a,
                        const BoxDomain& box, double eps) {
  BoundReport rep = base_report(chi, box, "thm7");
  rep.eps = eps;
  rep.twist = a.a.encode();
  const Field& f = *chi.field;
  if (!(eps > 0.0) || eps > 0.25)
    fail(ErrorCode::EpsOutOfRange, "need 0 < eps <= 1/4");
  double side_gate = std::pow(static_cast<double>(f.p()), 0.25 + eps);
  bool ok = f.n() >= 2 && !chi.trivial();
  for (u64 s : box.sides) ok = ok && static_cast<double>(s) >= side_gate;
  if (!ok) {
    rep.holds = Holds::NA;
    return rep;
  }
  rep.lhs = partial_gauss_sum(chi, a, box).magnitude;
  rep.rhs = rhs_thm7(static_cast<double>(box.cardinality()),
                     static_cast<double>(f.p()), eps);
  set_ratio(rep);
  rep.holds = Holds::NA;
  return rep;
}

BoundReport report_weil(const MultChar& chi, const RootMultiset& f) {
  BoundedSum s = weil_sum(chi, f);
  const Field& fld = *chi.field;
  BoundReport rep;
  rep.theorem = "weil";
  rep.p = fld.p();
  rep.n = fld.n();
  rep.modulus = fld.modulus_string();
  rep.chi_exponent = chi.exponent;
  rep.lhs = s.sum.magnitude;
  rep.rhs = s.rhs;
  set_ratio(rep);
  rep.holds = s.holds ? Holds::True : Holds::False;
  return rep;
}

BoundReport report_ps(const MultChar& chi, const FieldElement& g, u64 a) {
  BoundedSum s = ps_sum(chi, g, a);
  const Field& fld = *chi.field;
  BoundReport rep;
  rep.theorem = "ps";
  rep.p = fld.p();
  rep.n = fld.n();
  rep.modulus = fld.modulus_string();
  rep.chi_exponent = chi.exponent;
  rep.twist = a % fld.p();
  rep.box = "g=" + std::to_string(g.encode());
  rep.lhs = s.sum.magnitude;
  rep.rhs = s.rhs;
  set_ratio(rep);
  rep.holds = s.holds ? Holds::True : Holds::False;
  return rep;
}

}  // namespace charsum
