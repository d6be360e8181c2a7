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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charsum/errors.hpp"
#include "charsum/kahan.hpp"
#include "charsum/numeric.hpp"

namespace charsum {

class Field;

// Element of F_{p^n}: coefficient vector in the power basis of the modulus,
// ascending degree, every coefficient in [0, p). Plain data; the owning
// field must outlive it.
struct FieldElement {
  const Field* field = nullptr;
  std::vector<u64> coeffs;

  bool is_zero() const {
    for (u64 c : coeffs)
      if (c) return false;
    return true;
  }

  // Canonical encoding sum coeffs[i] * p^i; bijective, order-preserving
  // per coordinate.
  u64 encode() const;

  bool operator==(const FieldElement& o) const {
    return field == o.field && coeffs == o.coeffs;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

// Immutable description of F_{p^n} with exact arithmetic. Construct via
// Field::make; safely shareable across threads after construction.
class Field {
 public:
  static constexpr u64 kDefaultDlogTableThreshold = u64(1) << 24;

  // Validates p (odd prime) and the modulus (monic, degree n, irreducible);
  // finds the modulus itself when omitted, and the lexicographically first
  // multiplicative generator. q = p^n must fit below 2^63.
  static std::shared_ptr<const Field> make(
      u64 p, u32 n, std::optional<std::vector<u64>> modulus = std::nullopt,
      u64 dlog_table_threshold = kDefaultDlogTableThreshold);

  u64 p() const { return p_; }
  u32 n() const { return n_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return modulus_; }
  const FieldElement& generator() const { return generator_; }
  const std::vector<u64>& q1_prime_factors() const { return q1_factors_; }

  // --- element construction ---
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement scalar(u64 c) const;  // constant c mod p
  FieldElement from_coeffs(std::vector<u64> coeffs) const;
  FieldElement from_encoding(u64 enc) const;

  // --- exact arithmetic ---
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scalar_mul(u64 c, const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;  // DivisionByZero on 0
  FieldElement pow(const FieldElement& a, u64 k) const;
  FieldElement frobenius(const FieldElement& a) const;  // a^p
  FieldElement frobenius_k(const FieldElement& a, u32 k) const;

  // Tr(a) = sum of the n Frobenius iterates; lands in the prime subfield
  // and is returned as a residue in [0, p).
  u64 trace(const FieldElement& a) const;

  // generator^result = a, result in [0, q-1). Table lookup when the table
  // was built, baby-step giant-step otherwise. DlogOfZero on 0.
  u64 dlog(const FieldElement& a) const;

  bool has_dlog_table() const { return !dlog_table_.empty(); }
  const std::vector<u64>& dlog_table() const { return dlog_table_; }

  // Tr(x^i) for i < n; trace(a) is the dot product of a with this.
  const std::vector<u64>& trace_of_powers() const { return trace_pow_; }

  // Root-of-unity tables exp(2*pi*i*k/p) and exp(2*pi*i*k/(q-1)),
  // built once on first use.
  const Complex& root_p(u64 k) const;
  const Complex& root_q1(u64 k) const;

  // True iff g generates F_q over F_p, i.e. 1, g, ..., g^{n-1} span.
  bool is_generating_element(const FieldElement& g) const;

  // Order-check against the factorization of q-1.
  bool has_full_multiplicative_order(const FieldElement& a) const;

  std::string modulus_string() const;  // ascending coeffs joined by ':'

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;

  void check_owned(const FieldElement& a) const;
  void check_same(const FieldElement& a, const FieldElement& b) const;

  u64 p_ = 0;
  u32 n_ = 0;
  u64 q_ = 0;
  std::vector<u64> modulus_;
  std::vector<u64> q1_factors_;
  FieldElement generator_;
  std::vector<u64> trace_pow_;
  std::vector<u64> dlog_table_;  // indexed by encoding; empty when q is large

  // lazy baby-step table for BSGS dlog
  mutable std::once_flag bsgs_once_;
  mutable u64 bsgs_m_ = 0;
  mutable std::unordered_map<u64, u64> bsgs_baby_;
  mutable FieldElement bsgs_giant_;

  mutable std::once_flag roots_once_;
  mutable std::vector<Complex> roots_p_;
  mutable std::vector<Complex> roots_q1_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Monic irreducible degree-n polynomial over F_p, ascending coefficients
// (length n+1). Deterministic: the polynomials are scanned with the
// constant coefficient varying fastest and the seed indexes into the
// irreducibles found, wrapping around. Degree 1 always returns x.
std::vector<u64> find_irreducible(u64 p, u32 n, u64 seed);

// gcd-based irreducibility test for a monic degree-n polynomial.
bool is_irreducible_poly(const std::vector<u64>& f, u64 p);

// Convenience wrapper matching Field::make with validation errors
// NotPrime / DegreeMismatch / ReducibleModulus.
FieldPtr make_field(u64 p, u32 n,
                    std::optional<std::vector<u64>> modulus = std::nullopt,
                    u64 dlog_table_threshold = Field::kDefaultDlogTableThreshold);

}  // namespace charsum
