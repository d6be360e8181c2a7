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

#include <complex>

namespace charsum {

using Complex = std::complex<double>;

// Kahan compensated accumulator. All character-sum accumulation in this
// project goes through this so that a fixed summation order yields
// bit-identical results run to run.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;

  void add(double x) {
    double y = x - c;
    volatile double t = sum + y;  // keep the compiler from re-associating
    volatile double z = t - sum;
    c = static_cast<double>(z) - y;
    sum = static_cast<double>(t);
  }
};

struct ComplexKahan {
  KahanSum re;
  KahanSum im;

  void add(const Complex& z) {
    re.add(z.real());
    im.add(z.imag());
  }

  Complex value() const { return {re.sum, im.sum}; }
};

}  // namespace charsum
