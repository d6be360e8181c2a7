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

#include "charsum/box.hpp"

#include <sstream>

namespace charsum {

namespace {

bool invertible_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  std::size_t n = rows.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 inv_l = powmod(rows[rank][col], p - 2, p);
    for (std::size_t j = col; j < n; ++j)
      rows[rank][j] = mulmod(rows[rank][j], inv_l, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 f = rows[r][col];
      for (std::size_t j = col; j < n; ++j)
        rows[r][j] = submod(rows[r][j], mulmod(f, rows[rank][j], p), p);
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace

std::string BoxDomain::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    if (j) os << ',';
    os << offsets[j] << ':' << sides[j];
  }
  return os.str();
}

BoxDomain make_box(const FieldPtr& field, std::vector<u64> offsets,
                   std::vector<u64> sides,
                   std::vector<std::vector<u64>> basis) {
  u32 n = field->n();
  u64 p = field->p();
  if (offsets.size() != n || sides.size() != n)
    fail(ErrorCode::BoxOutOfRange, "need n offsets and n sides");
  u128 card = 1;
  for (u32 j = 0; j < n; ++j) {
    if (sides[j] < 1) fail(ErrorCode::BoxOutOfRange, "side must be >= 1");
    if (offsets[j] + sides[j] >= p)
      fail(ErrorCode::BoxOutOfRange, "N_j + H_j must stay below p");
    card *= sides[j];
    if (card >= (u128(1) << 63)) fail(ErrorCode::TooLarge, "box cardinality");
  }
  if (basis.empty()) {
    basis.assign(n, std::vector<u64>(n, 0));
    for (u32 j = 0; j < n; ++j) basis[j][j] = 1;
  } else {
    if (basis.size() != n)
      fail(ErrorCode::SingularBasis, "basis must be an n x n matrix");
    for (auto& row : basis) {
      if (row.size() != n)
        fail(ErrorCode::SingularBasis, "basis must be an n x n matrix");
      for (u64& c : row) c %= p;
    }
    if (!invertible_mod_p(basis, p))
      fail(ErrorCode::SingularBasis, "basis matrix is singular mod p");
  }
  return BoxDomain{field, std::move(offsets), std::move(sides), std::move(basis)};
}

BoxDomain parse_box(const FieldPtr& field, const std::string& spec,
                    std::vector<std::vector<u64>> basis) {
  std::vector<u64> offsets, sides;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::ConfigInvalid, "box part '" + part + "' is not N:H");
    try {
      offsets.push_back(std::stoull(part.substr(0, colon)));
      sides.push_back(std::stoull(part.substr(colon + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::ConfigInvalid, "box part '" + part + "' is not numeric");
    }
  }
  if (offsets.size() != field->n())
    fail(ErrorCode::ConfigInvalid, "box dimension does not match n");
  return make_box(field, std::move(offsets), std::move(sides), std::move(basis));
}

void for_each_element(const BoxDomain& box,
                      const std::function<void(const FieldElement&)>& fn) {
  const Field& f = *box.field;
  u32 n = f.n();
  std::vector<FieldElement> omega;
  omega.reserve(n);
  for (u32 j = 0; j < n; ++j) omega.push_back(f.from_coeffs(box.basis[j]));
  std::vector<FieldElement> start(n, f.zero());
  for (u32 j = 0; j < n; ++j)
    start[j] = f.scalar_mul((box.offsets[j] + 1) % f.p(), omega[j]);

  std::vector<u64> c(n, 0);  // coordinate index within the side
  std::vector<FieldElement> prefix(n + 1, f.zero());
  for (u32 j = 0; j < n; ++j) prefix[j + 1] = f.add(prefix[j], start[j]);

  while (true) {
    fn(prefix[n]);
    u32 axis = n;
    while (axis > 0) {
      --axis;
      if (c[axis] + 1 < box.sides[axis]) break;
      if (axis == 0) return;
    }
    if (c[axis] + 1 >= box.sides[axis]) return;
    ++c[axis];
    prefix[axis + 1] = f.add(prefix[axis + 1], omega[axis]);
    for (u32 j = axis + 1; j < n; ++j) {
      c[j] = 0;
      prefix[j + 1] = f.add(prefix[j], start[j]);
    }
  }
}

std::vector<FieldElement> box_elements(const BoxDomain& box) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(box.cardinality()));
  for_each_element(box, [&](const FieldElement& x) { out.push_back(x); });
  return out;
}

std::vector<BoxDomain> split(const BoxDomain& box, u64 max_side) {
  if (max_side < 1) fail(ErrorCode::BoxOutOfRange, "max_side must be >= 1");
  u32 n = box.field->n();
  std::vector<std::vector<std::pair<u64, u64>>> chunks(n);
  for (u32 j = 0; j < n; ++j) {
    for (u64 s = 0; s < box.sides[j]; s += max_side) {
      chunks[j].push_back({box.offsets[j] + s,
                           std::min(max_side, box.sides[j] - s)});
    }
  }
  std::vector<BoxDomain> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<u64> offs(n), sides(n);
    for (u32 j = 0; j < n; ++j) {
      offs[j] = chunks[j][idx[j]].first;
      sides[j] = chunks[j][idx[j]].second;
    }
    out.push_back(make_box(box.field, std::move(offs), std::move(sides), box.basis));
    u32 axis = n;
    bool done = true;
    while (axis > 0) {
      --axis;
      if (idx[axis] + 1 < chunks[axis].size()) {
        ++idx[axis];
        for (u32 j = axis + 1; j < n; ++j) idx[j] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

u64 coset_intersection_count(const BoxDomain& box, const FieldElement& xi, u32 k) {
  const Field& f = *box.field;
  if (k == 0 || f.n() % k != 0) fail(ErrorCode::NotASubfield, "k must divide n");
  if (xi.is_zero()) fail(ErrorCode::DivisionByZero, "coset of zero");
  FieldElement inv_xi = f.inv(xi);
  u64 count = 0;
  for_each_element(box, [&](const FieldElement& x) {
    FieldElement z = f.mul(x, inv_xi);
    if (f.frobenius_k(z, k) == z) ++count;
  });
  return count;
}

CosetMax max_coset_intersection(const BoxDomain& box, u32 k, u64 coset_limit) {
  const Field& f = *box.field;
  if (k == 0 || f.n() % k != 0) fail(ErrorCode::NotASubfield, "k must divide n");
  u64 sub = 1;
  for (u32 i = 0; i < k; ++i) sub *= f.p();
  u64 num_cosets = (f.q() - 1) / (sub - 1);
  if (num_cosets > coset_limit)
    fail(ErrorCode::TooLarge, "too many cosets to scan exactly");

  // x lies in the coset g^c * F_{p^k}^* iff dlog(x) == c (mod num_cosets).
  std::vector<u64> counts(num_cosets, 0);
  for_each_element(box, [&](const FieldElement& x) {
    ++counts[f.dlog(x) % num_cosets];
  });
  u64 best = 0;
  for (u64 c : counts) best = std::max(best, c);

  // Representative: smallest encoding inside a maximizing coset.
  CosetMax result;
  result.count = best;
  FieldElement step = f.pow(f.generator(), num_cosets);
  bool have_rep = false;
  for (u64 cls = 0; cls < num_cosets; ++cls) {
    if (counts[cls] != best) continue;
    FieldElement cur = f.pow(f.generator(), cls);
    FieldElement min_elem = cur;
    for (u64 j = 1; j < sub - 1; ++j) {
      cur = f.mul(cur, step);
      if (cur.encode() < min_elem.encode()) min_elem = cur;
    }
    if (!have_rep || min_elem.encode() < result.representative.encode()) {
      result.representative = min_elem;
      have_rep = true;
    }
  }
  return result;
}

}  // namespace charsum
