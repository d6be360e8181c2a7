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

#include <cstdint>
#include <vector>

namespace charsum {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  a %= m;
  b %= m;
  u64 s = a + b;  // a,b < m <= 2^63 so no overflow for our moduli
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + m - b;
}

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

// Distinct prime factors, sorted ascending (trial division + Pollard-Brent).
std::vector<u64> distinct_prime_factors(u64 n);

}  // namespace charsum
