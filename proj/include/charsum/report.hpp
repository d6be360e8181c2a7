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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "charsum/numeric.hpp"

namespace charsum {

enum class Holds { True, False, NA };

inline const char* holds_string(Holds h) {
  switch (h) {
    case Holds::True: return "true";
    case Holds::False: return "false";
    case Holds::NA: return "na";
  }
  return "na";
}

// One verified or reported inequality.
struct BoundReport {
  std::string theorem;  // pv | burgess2 | burgess3 | dl | chang3 | weil | ps |
                        // chang_energy | konyagin_energy | thm6 | thm7
  u64 p = 0;
  u32 n = 0;
  std::string modulus;              // ascending coeffs joined by ':'
  std::optional<u64> chi_exponent;
  std::optional<u64> twist;         // canonical encoding of a
  std::string box;                  // "N1:H1,..." or empty
  std::optional<u64> r;
  std::optional<double> eps;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;               // lhs/rhs when rhs > 0
  Holds holds = Holds::NA;
};

// 12 significant digits, the project-wide real format.
std::string fmt12(double x);

// CSV columns, exactly in this order:
// theorem,p,n,modulus,chi_exp,a,box,r,eps,lhs,rhs,ratio,holds
void emit_csv(const std::vector<BoundReport>& table, std::ostream& os);
void emit_json(const std::vector<BoundReport>& table, std::ostream& os);

// format is "csv" or "json"; writes to path ("-" = stdout).
void emit(const std::vector<BoundReport>& table, const std::string& format,
          const std::string& path);

}  // namespace charsum
