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

#include "charsum/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace charsum {

namespace {

constexpr u64 kRootTableLimit = u64(1) << 26;

void poly_trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// c = a*b mod (f, p), f monic.
std::vector<u64> poly_mulmod(const std::vector<u64>& a,
                             const std::vector<u64>& b,
                             const std::vector<u64>& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::size_t deg_f = f.size() - 1;
  std::vector<u64> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  for (std::size_t i = c.size(); i-- > deg_f;) {
    u64 lead = c[i];
    if (!lead) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < deg_f; ++j) {
      if (!f[j]) continue;
      c[i - deg_f + j] = submod(c[i - deg_f + j], mulmod(lead, f[j], p), p);
    }
  }
  c.resize(deg_f);
  poly_trim(c);
  return c;
}

std::vector<u64> poly_powmod(std::vector<u64> base, u64 e,
                             const std::vector<u64>& f, u64 p) {
  std::vector<u64> r = {1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> poly_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  // b nonzero, not necessarily monic
  u64 inv_lead = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 factor = mulmod(a.back(), inv_lead, p);
    std::size_t shift = a.size() - b.size();
    if (factor) {
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = submod(a[shift + j], mulmod(factor, b[j], p), p);
    }
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    std::vector<u64> r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_poly(const std::vector<u64>& f, u64 p) {
  if (f.size() < 2) return false;
  std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // f has no irreducible factor of degree k for any k <= n/2
  // iff gcd(x^{p^k} - x, f) is constant for those k.
  std::vector<u64> h = {0, 1};  // x
  for (std::size_t k = 1; k <= n / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    std::vector<u64> diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = submod(diff[1], 1, p);
    poly_trim(diff);
    std::vector<u64> g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<u64> find_irreducible(u64 p, u32 n, u64 seed) {
  if (n == 1) return {0, 1};  // x
  u128 total = 1;
  for (u32 i = 0; i < n; ++i) total *= p;
  auto candidate = [&](u128 m) {
    std::vector<u64> f(n + 1, 0);
    for (u32 i = 0; i < n; ++i) {
      f[i] = static_cast<u64>(m % p);
      m /= p;
    }
    f[n] = 1;
    return f;
  };
  u64 found = 0;
  for (u128 m = 0; m < total; ++m) {
    std::vector<u64> f = candidate(m);
    if (is_irreducible_poly(f, p)) {
      if (found == seed) return f;
      ++found;
    }
  }
  // Scan exhausted (only reachable for small fields): wrap the seed.
  u64 target = seed % found;
  u64 idx = 0;
  for (u128 m = 0; m < total; ++m) {
    std::vector<u64> f = candidate(m);
    if (is_irreducible_poly(f, p)) {
      if (idx == target) return f;
      ++idx;
    }
  }
  fail(ErrorCode::Internal, "irreducible scan inconsistent");
}

u64 FieldElement::encode() const {
  u64 p = field->p();
  u64 enc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) enc = enc * p + coeffs[i];
  return enc;
}

void Field::check_owned(const FieldElement& a) const {
  if (a.field != this) fail(ErrorCode::FieldMismatch, "element of another field");
  if (a.coeffs.size() != n_)
    fail(ErrorCode::FieldMismatch, "coefficient vector length");
}

void Field::check_same(const FieldElement& a, const FieldElement& b) const {
  check_owned(a);
  check_owned(b);
}

FieldElement Field::zero() const { return {this, std::vector<u64>(n_, 0)}; }

FieldElement Field::one() const { return scalar(1); }

FieldElement Field::scalar(u64 c) const {
  std::vector<u64> v(n_, 0);
  v[0] = c % p_;
  return {this, std::move(v)};
}

FieldElement Field::from_coeffs(std::vector<u64> coeffs) const {
  if (coeffs.size() != n_) fail(ErrorCode::DegreeMismatch, "need n coefficients");
  for (u64& c : coeffs) c %= p_;
  return {this, std::move(coeffs)};
}

FieldElement Field::from_encoding(u64 enc) const {
  std::vector<u64> v(n_, 0);
  for (u32 i = 0; i < n_; ++i) {
    v[i] = enc % p_;
    enc /= p_;
  }
  if (enc != 0) fail(ErrorCode::TooLarge, "encoding out of range");
  return {this, std::move(v)};
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  FieldElement r = a;
  for (u32 i = 0; i < n_; ++i) r.coeffs[i] = addmod(r.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  FieldElement r = a;
  for (u32 i = 0; i < n_; ++i) r.coeffs[i] = submod(r.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElement Field::neg(const FieldElement& a) const {
  check_owned(a);
  FieldElement r = a;
  for (u32 i = 0; i < n_; ++i) r.coeffs[i] = r.coeffs[i] ? p_ - r.coeffs[i] : 0;
  return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  if (n_ == 1) return {this, {mulmod(a.coeffs[0], b.coeffs[0], p_)}};
  std::vector<u64> c(2 * n_ - 1, 0);
  for (u32 i = 0; i < n_; ++i) {
    if (!a.coeffs[i]) continue;
    for (u32 j = 0; j < n_; ++j) {
      if (!b.coeffs[j]) continue;
      c[i + j] = addmod(c[i + j], mulmod(a.coeffs[i], b.coeffs[j], p_), p_);
    }
  }
  for (std::size_t i = c.size(); i-- > n_;) {
    u64 lead = c[i];
    if (!lead) continue;
    c[i] = 0;
    for (u32 j = 0; j < n_; ++j) {
      if (!modulus_[j]) continue;
      c[i - n_ + j] = submod(c[i - n_ + j], mulmod(lead, modulus_[j], p_), p_);
    }
  }
  c.resize(n_);
  return {this, std::move(c)};
}

FieldElement Field::scalar_mul(u64 c, const FieldElement& a) const {
  check_owned(a);
  c %= p_;
  FieldElement r = a;
  for (u32 i = 0; i < n_; ++i) r.coeffs[i] = mulmod(r.coeffs[i], c, p_);
  return r;
}

FieldElement Field::pow(const FieldElement& a, u64 k) const {
  check_owned(a);
  FieldElement r = one();
  FieldElement base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  check_owned(a);
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElement Field::frobenius(const FieldElement& a) const { return pow(a, p_); }

FieldElement Field::frobenius_k(const FieldElement& a, u32 k) const {
  FieldElement r = a;
  for (u32 i = 0; i < k; ++i) r = frobenius(r);
  return r;
}

u64 Field::trace(const FieldElement& a) const {
  check_owned(a);
  u64 t = 0;
  for (u32 i = 0; i < n_; ++i)
    t = addmod(t, mulmod(a.coeffs[i], trace_pow_[i], p_), p_);
  return t;
}

u64 Field::dlog(const FieldElement& a) const {
  check_owned(a);
  if (a.is_zero()) fail(ErrorCode::DlogOfZero, "dlog of zero");
  if (!dlog_table_.empty()) {
    u64 d = dlog_table_[a.encode()];
    if (d >= q_) fail(ErrorCode::Internal, "dlog table hole");
    return d;
  }
  std::call_once(bsgs_once_, [&]() {
    u64 ord = q_ - 1;
    bsgs_m_ = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(ord))));
    if (bsgs_m_ == 0) bsgs_m_ = 1;
    FieldElement acc = one();
    bsgs_baby_.reserve(bsgs_m_ * 2);
    for (u64 j = 0; j < bsgs_m_; ++j) {
      bsgs_baby_.emplace(acc.encode(), j);
      acc = mul(acc, generator_);
    }
    bsgs_giant_ = inv(pow(generator_, bsgs_m_));
  });
  FieldElement y = a;
  for (u64 i = 0; i <= bsgs_m_; ++i) {
    auto it = bsgs_baby_.find(y.encode());
    if (it != bsgs_baby_.end()) return (i * bsgs_m_ + it->second) % (q_ - 1);
    y = mul(y, bsgs_giant_);
  }
  fail(ErrorCode::Internal, "BSGS failed");
}

const Complex& Field::root_p(u64 k) const {
  std::call_once(roots_once_, [&]() {
    if (p_ > kRootTableLimit || q_ - 1 > kRootTableLimit)
      fail(ErrorCode::TooLarge, "field too large for character tables");
    const double two_pi = 2.0 * std::acos(-1.0);
    roots_p_.resize(p_);
    for (u64 i = 0; i < p_; ++i)
      roots_p_[i] = std::polar(1.0, two_pi * static_cast<double>(i) /
                                        static_cast<double>(p_));
    roots_q1_.resize(q_ - 1);
    for (u64 i = 0; i < q_ - 1; ++i)
      roots_q1_[i] = std::polar(1.0, two_pi * static_cast<double>(i) /
                                         static_cast<double>(q_ - 1));
  });
  return roots_p_[k % p_];
}

const Complex& Field::root_q1(u64 k) const {
  root_p(0);  // force table build
  return roots_q1_[k % (q_ - 1)];
}

bool Field::has_full_multiplicative_order(const FieldElement& a) const {
  check_owned(a);
  if (a.is_zero()) return false;
  for (u64 f : q1_factors_) {
    if (pow(a, (q_ - 1) / f) == one()) return false;
  }
  return true;
}

bool Field::is_generating_element(const FieldElement& g) const {
  check_owned(g);
  // Row-reduce the matrix whose rows are 1, g, ..., g^{n-1}.
  std::vector<std::vector<u64>> rows;
  FieldElement acc = one();
  for (u32 i = 0; i < n_; ++i) {
    rows.push_back(acc.coeffs);
    acc = mul(acc, g);
  }
  u32 rank = 0;
  for (u32 col = 0; col < n_ && rank < n_; ++col) {
    u32 pivot = rank;
    while (pivot < n_ && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 inv_l = powmod(rows[rank][col], p_ - 2, p_);
    for (u32 j = col; j < n_; ++j) rows[rank][j] = mulmod(rows[rank][j], inv_l, p_);
    for (u32 r = 0; r < n_; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 f = rows[r][col];
      for (u32 j = col; j < n_; ++j)
        rows[r][j] = submod(rows[r][j], mulmod(f, rows[rank][j], p_), p_);
    }
    ++rank;
  }
  return rank == n_;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ':';
    os << modulus_[i];
  }
  return os.str();
}

std::shared_ptr<const Field> Field::make(u64 p, u32 n,
                                         std::optional<std::vector<u64>> modulus,
                                         u64 dlog_table_threshold) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    fail(ErrorCode::NotPrime, "p must be an odd prime, got " + std::to_string(p));
  if (n < 1) fail(ErrorCode::DegreeMismatch, "n must be >= 1");
  u128 q = 1;
  for (u32 i = 0; i < n; ++i) {
    q *= p;
    if (q >= (u128(1) << 63)) fail(ErrorCode::TooLarge, "p^n exceeds 2^63");
  }

  std::vector<u64> f;
  if (modulus) {
    f = *modulus;
    for (u64& c : f) c %= p;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() != n + 1)
      fail(ErrorCode::DegreeMismatch, "modulus degree must equal n");
    if (f.back() != 1) {
      u64 s = powmod(f.back(), p - 2, p);  // scale monic
      for (u64& c : f) c = mulmod(c, s, p);
    }
    if (n >= 2 && !is_irreducible_poly(f, p))
      fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    f = find_irreducible(p, n, 0);
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->n_ = n;
  field->q_ = static_cast<u64>(q);
  field->modulus_ = std::move(f);

  // Tr(x^i) by the defining Frobenius sum; each value must land in the
  // prime subfield.
  field->trace_pow_.assign(n, 0);
  {
    FieldElement xi = field->one();
    FieldElement x = field->zero();
    if (n == 1) {
      x = field->one();
    } else {
      x.coeffs[1] = 1;
    }
    for (u32 i = 0; i < n; ++i) {
      FieldElement t = field->zero();
      FieldElement it = xi;
      for (u32 k = 0; k < n; ++k) {
        t = field->add(t, it);
        it = field->pow(it, p);
      }
      for (u32 k = 1; k < n; ++k) {
        if (t.coeffs[k] != 0)
          fail(ErrorCode::Internal, "trace left the prime subfield");
      }
      field->trace_pow_[i] = t.coeffs[0];
      xi = field->mul(xi, x);
    }
  }

  field->q1_factors_ = distinct_prime_factors(field->q_ - 1);

  // First element in encoding (lexicographic coefficient) order with
  // multiplicative order q-1.
  bool found = false;
  for (u64 enc = 1; enc < field->q_; ++enc) {
    FieldElement cand = field->from_encoding(enc);
    if (field->has_full_multiplicative_order(cand)) {
      field->generator_ = cand;
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorCode::Internal, "no generator found");

  if (field->q_ <= dlog_table_threshold) {
    field->dlog_table_.assign(field->q_, field->q_);
    FieldElement acc = field->one();
    for (u64 j = 0; j + 1 < field->q_; ++j) {
      field->dlog_table_[acc.encode()] = j;
      acc = field->mul(acc, field->generator_);
    }
  }
  return field;
}

FieldPtr make_field(u64 p, u32 n, std::optional<std::vector<u64>> modulus,
                    u64 dlog_table_threshold) {
  return Field::make(p, n, std::move(modulus), dlog_table_threshold);
}

}  // namespace charsum
