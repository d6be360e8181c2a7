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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "charsum/box.hpp"

using namespace charsum;

namespace {

std::set<u64> encodings(const BoxDomain& box) {
  std::set<u64> s;
  for_each_element(box, [&](const FieldElement& x) { s.insert(x.encode()); });
  return s;
}

}  // namespace

TEST_SUITE("box") {

TEST_CASE("range validation") {
  auto f = make_field(7, 1);
  CHECK_NOTHROW(make_box(f, {3}, {3}));  // (3, 6], ok
  try {
    make_box(f, {3}, {5});  // 3 + 5 >= 7
    FAIL("expected BoxOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoxOutOfRange);
  }
  CHECK_THROWS_AS(make_box(f, {0}, {0}), Error);        // empty side
  CHECK_THROWS_AS(make_box(f, {0, 0}, {1, 1}), Error);  // wrong dimension
}

TEST_CASE("enumeration in F_25") {
  auto f = make_field(5, 2);
  // x1 in (0, 2], x2 in (0, 1]: elements x1 + x2 w, encodings 5 x2 + x1
  BoxDomain b = make_box(f, {0, 0}, {2, 1});
  CHECK(b.cardinality() == 2);
  CHECK(encodings(b) == std::set<u64>{6, 7});
  CHECK(b.to_string() == "0:2,0:1");
}

TEST_CASE("elements are distinct and never zero") {
  for (auto [p, n] : std::vector<std::pair<u64, u32>>{{11, 1}, {5, 2}, {3, 3}}) {
    auto f = make_field(p, n);
    std::vector<u64> N(n, 0), H(n, p - 1);  // the whole of (0, p-1]^n
    BoxDomain b = make_box(f, N, H);
    std::set<u64> s = encodings(b);
    CHECK(s.size() == b.cardinality());
    CHECK(s.count(0) == 0);
  }
}

TEST_CASE("parse_box round trip") {
  auto f = make_field(5, 2);
  BoxDomain b = parse_box(f, "1:2,0:3");
  CHECK(b.offsets == std::vector<u64>{1, 0});
  CHECK(b.sides == std::vector<u64>{2, 3});
  CHECK(b.to_string() == "1:2,0:3");
  CHECK_THROWS_AS(parse_box(f, "1:2"), Error);        // dimension
  CHECK_THROWS_AS(parse_box(f, "1:2,junk"), Error);   // syntax
  try {
    parse_box(f, "nope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("split partitions the box") {
  auto f = make_field(11, 2);
  BoxDomain b = make_box(f, {1, 2}, {7, 5});
  auto parts = split(b, 3);
  u64 total = 0;
  std::set<u64> seen;
  for (const auto& part : parts) {
    for (u64 h : part.sides) CHECK(h <= 3);
    total += part.cardinality();
    for (u64 e : encodings(part)) CHECK(seen.insert(e).second);  // disjoint
  }
  CHECK(total == b.cardinality());
  CHECK(seen == encodings(b));  // exact cover
}

TEST_CASE("singular basis rejected") {
  auto f = make_field(5, 2);
  try {
    make_box(f, {0, 0}, {2, 2}, {{1, 2}, {2, 4}});  // row2 = 2 row1 mod 5
    FAIL("expected SingularBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularBasis);
  }
  CHECK_NOTHROW(make_box(f, {0, 0}, {2, 2}, {{1, 2}, {2, 3}}));
}

TEST_CASE("basis changes the enumerated elements") {
  auto f = make_field(5, 2);
  // omega_1 = 1, omega_2 = w: x1 + x2 w, same as the power basis
  BoxDomain b1 = make_box(f, {0, 0}, {2, 2}, {{1, 0}, {0, 1}});
  CHECK(encodings(b1) == encodings(make_box(f, {0, 0}, {2, 2})));
  // omega_2 = 1 + w instead
  BoxDomain b2 = make_box(f, {0, 0}, {2, 2}, {{1, 0}, {1, 1}});
  std::set<u64> expect;
  for (u64 x1 = 1; x1 <= 2; ++x1)
    for (u64 x2 = 1; x2 <= 2; ++x2) expect.insert(5 * x2 + (x1 + x2) % 5);
  CHECK(encodings(b2) == expect);
}

TEST_CASE("coset intersection counts") {
  auto f = make_field(5, 2);
  // coset 1 * F_5^*: the nonzero scalars {1,..,4}; the power-basis box
  // (0,2] x (0,2] contains none of them (x2 >= 1 forces a w component)
  BoxDomain b = make_box(f, {0, 0}, {2, 2});
  CHECK(coset_intersection_count(b, f->one(), 1) == 0);
  // k = n: every nonzero element of the box counts
  CHECK(coset_intersection_count(b, f->one(), 2) == b.cardinality());
  // coset w F_5^* = {w, 2w, 3w, 4w} needs x1 = 0, excluded by every box
  FieldElement w = f->from_coeffs({0, 1});
  BoxDomain full = make_box(f, {0, 0}, {4, 4});
  CHECK(coset_intersection_count(full, w, 1) == 0);
  // coset (1+w) F_5^* = {1+w, 2+2w, 3+3w, 4+4w}, entirely inside the grid
  CHECK(coset_intersection_count(full, f->from_coeffs({1, 1}), 1) == 4);
  CHECK_THROWS_AS(coset_intersection_count(b, f->zero(), 1), Error);
  auto f27 = make_field(3, 3);
  BoxDomain b3 = make_box(f27, {0, 0, 0}, {1, 1, 1});
  CHECK_THROWS_AS(coset_intersection_count(b3, f27->one(), 2), Error);
}

TEST_CASE("coset count matches a brute-force scan") {
  auto f = make_field(5, 2);
  for (auto spec : {"0:4,0:4", "1:3,0:2", "0:2,2:2"}) {
    BoxDomain b = parse_box(f, spec);
    for (u64 xi_enc = 1; xi_enc < 25; ++xi_enc) {
      FieldElement xi = f->from_encoding(xi_enc);
      FieldElement xi_inv = f->inv(xi);
      u64 direct = 0;
      for_each_element(b, [&](const FieldElement& x) {
        FieldElement z = f->mul(x, xi_inv);
        // z in F_5 iff the w coordinate vanishes
        if (z.coeffs[1] == 0) ++direct;
      });
      CHECK(coset_intersection_count(b, xi, 1) == direct);
    }
  }
}

TEST_CASE("max_coset_intersection against exhaustive search") {
  auto f = make_field(5, 2);
  for (auto spec : {"0:4,0:4", "0:2,0:3", "1:2,1:2"}) {
    BoxDomain b = parse_box(f, spec);
    CosetMax best = max_coset_intersection(b, 1);
    // exhaustive: scan all xi, dedupe cosets by the set of members
    u64 best_count = 0;
    for (u64 xi_enc = 1; xi_enc < 25; ++xi_enc) {
      u64 c = coset_intersection_count(b, f->from_encoding(xi_enc), 1);
      best_count = std::max(best_count, c);
    }
    CHECK(best.count == best_count);
    CHECK(coset_intersection_count(b, best.representative, 1) == best_count);
    // representative is minimal within its own coset
    FieldElement rep = best.representative;
    for (u64 s = 1; s < 5; ++s) {
      FieldElement other = f->scalar_mul(s, rep);
      CHECK(rep.encode() <= other.encode());
    }
  }
}

}  // TEST_SUITE
