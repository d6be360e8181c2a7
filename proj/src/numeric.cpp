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

#include "charsum/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace charsum {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  u64 x0 = 2, c = 1;
  while (true) {
    u64 x = x0, y = x0, d = 1;
    u64 q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = addmod(mulmod(y, y, n), c, n);
      int k = 0;
      while (k < lam && d == 1) {
        u64 ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = addmod(mulmod(y, y, n), c, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // backtrack
          d = 1;
          y = ys;
          do {
            y = addmod(mulmod(y, y, n), c, n);
            d = std::gcd(x > y ? x - y : y - x, n);
          } while (d == 1);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
    ++c;
    ++x0;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace charsum
