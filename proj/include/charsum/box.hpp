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

#include <functional>
#include <string>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

// n-dimensional box: coordinates x_j in (N_j, N_j + H_j], element
// sum x_j omega_j where omega_j is row j of the basis matrix (identity =
// power basis). Requires 0 <= N_j and N_j + H_j < p, so 0 is never in
// the box.
struct BoxDomain {
  FieldPtr field;
  std::vector<u64> offsets;  // N_j
  std::vector<u64> sides;    // H_j >= 1
  std::vector<std::vector<u64>> basis;  // n rows of n coordinates

  u64 cardinality() const {
    u64 c = 1;
    for (u64 h : sides) c *= h;
    return c;
  }

  std::string to_string() const;  // "N1:H1,N2:H2,..."
};

BoxDomain make_box(const FieldPtr& field, std::vector<u64> offsets,
                   std::vector<u64> sides,
                   std::vector<std::vector<u64>> basis = {});

// Parse "N1:H1,N2:H2,..." against the field's degree.
BoxDomain parse_box(const FieldPtr& field, const std::string& spec,
                    std::vector<std::vector<u64>> basis = {});

// Visits the elements in lexicographic coordinate order (last coordinate
// fastest). Exactly prod H_j distinct elements, never zero.
void for_each_element(const BoxDomain& box,
                      const std::function<void(const FieldElement&)>& fn);

std::vector<FieldElement> box_elements(const BoxDomain& box);

// Partition into sub-boxes with every side <= max_side, lexicographic
// chunk order.
std::vector<BoxDomain> split(const BoxDomain& box, u64 max_side);

// |{x in B : x/xi in F_{p^k}}|, membership tested via z^{p^k} = z.
u64 coset_intersection_count(const BoxDomain& box, const FieldElement& xi, u32 k);

struct CosetMax {
  FieldElement representative;  // smallest encoding inside the coset
  u64 count = 0;
};

// Maximizing coset of F_{p^k}^* in F_q^*; ties broken by the smallest
// canonical encoding of the representative. TooLarge when the number of
// cosets exceeds the scan limit.
CosetMax max_coset_intersection(const BoxDomain& box, u32 k,
                                u64 coset_limit = 1000000);

}  // namespace charsum
