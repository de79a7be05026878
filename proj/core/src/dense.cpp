// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dense.hpp"

#include <stdexcept>
#include <utility>

namespace dmkit::dense {
namespace {

void swap_rows(Mat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(Mat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

std::size_t rank(const FieldCtx& f, Mat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    swap_rows(m, r, p);
    const std::uint64_t inv = f.inv_raw(m(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = f.mul_raw(m(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) ^= f.mul_raw(factor, m(r, j));
    }
    ++r;
  }
  return r;
}

std::uint64_t determinant(const FieldCtx& f, Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    swap_rows(m, c, p);  // sign is irrelevant in characteristic 2
    det = f.mul_raw(det, m(c, c));
    const std::uint64_t inv = f.inv_raw(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = f.mul_raw(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) ^= f.mul_raw(factor, m(c, j));
    }
  }
  return det;
}

std::optional<Mat> inverse(const FieldCtx& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows;
  Mat w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    swap_rows(w, c, p);
    const std::uint64_t inv = f.inv_raw(w(c, c));
    for (std::size_t j = 0; j < 2 * n; ++j) w(c, j) = f.mul_raw(w(c, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      const std::uint64_t factor = w(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) w(i, j) ^= f.mul_raw(factor, w(c, j));
    }
  }
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  }
  return out;
}

std::uint64_t pfaffian(const FieldCtx& f, Mat m) {
  const std::size_t n = m.rows;
  if (n % 2 == 1) return 0;
  std::uint64_t pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && m(k, j) == 0) ++j;
    if (j == n) return 0;
    swap_rows(m, k + 1, j);
    swap_cols(m, k + 1, j);
    const std::uint64_t a = m(k, k + 1);
    pf = f.mul_raw(pf, a);
    const std::uint64_t inv = f.inv_raw(a);
    // Schur complement of the leading 2x2 block.
    for (std::size_t r = k + 2; r < n; ++r) {
      const std::uint64_t c0r = f.mul_raw(m(k, r), inv);
      const std::uint64_t c1r = f.mul_raw(m(k + 1, r), inv);
      if (c0r == 0 && c1r == 0) continue;
      for (std::size_t c = r + 1; c < n; ++c) {
        const std::uint64_t delta = f.mul_raw(c0r, m(k + 1, c)) ^ f.mul_raw(c1r, m(k, c));
        m(r, c) ^= delta;
        m(c, r) ^= delta;
      }
    }
  }
  return pf;
}

void IncrementalBasis::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] ^= f_.mul_raw(c, row[j]);
    }
  }
}

bool IncrementalBasis::is_independent(std::vector<std::uint64_t> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match basis dimension");
  reduce(v);
  for (auto x : v) {
    if (x != 0) return true;
  }
  return false;
}

bool IncrementalBasis::add(std::vector<std::uint64_t> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match basis dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const std::uint64_t inv = f_.inv_raw(v[p]);
  for (std::size_t j = p; j < dim_; ++j) v[j] = f_.mul_raw(v[j], inv);
  // Keep stored rows reduced against the new pivot so that reduce() can use
  // a single pass in insertion order.
  for (auto& row : rows_) {
    const std::uint64_t c = row[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < dim_; ++j) {
      if (v[j] != 0) row[j] ^= f_.mul_raw(c, v[j]);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace dmkit::dense
