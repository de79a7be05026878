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

#include "dmkit/skew_matrix.hpp"

#include <algorithm>
#include <utility>

#include "dense.hpp"

namespace dmkit {
namespace {

dense::Mat gather(const SkewMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  dense::Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.raw(rows[i], cols[j]);
  }
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

SkewMatrix::SkewMatrix(FieldCtx ctx, std::vector<Label> labels)
    : ctx_(ctx), labels_(std::move(labels)), a_(labels_.size() * labels_.size(), 0) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw MatrixError("duplicate matrix label: " + labels_[i]);
    }
  }
}

SkewMatrix SkewMatrix::from_rows(FieldCtx ctx, std::vector<Label> labels,
                                 const std::vector<std::vector<FieldElement>>& rows) {
  SkewMatrix m(ctx, std::move(labels));
  const std::size_t n = m.size();
  if (rows.size() != n) throw MatrixError("row count does not match label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw MatrixError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j].bits() != ctx.bits()) throw MatrixError("matrix entry from a different field");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i][i].is_zero()) throw MatrixError("nonzero diagonal entry at " + m.labels_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw MatrixError("matrix is not symmetric at (" + m.labels_[i] + ", " + m.labels_[j] + ")");
      }
      m.set_raw(i, j, rows[i][j].value());
    }
  }
  return m;
}

std::size_t SkewMatrix::index_of(const Label& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw UnknownLabelError("unknown matrix label: " + v);
  return it->second;
}

FieldElement SkewMatrix::at(const Label& u, const Label& v) const {
  return at(index_of(u), index_of(v));
}

void SkewMatrix::set(const Label& u, const Label& v, const FieldElement& x) {
  if (x.bits() != ctx_.bits()) throw MatrixError("matrix entry from a different field");
  set_raw(index_of(u), index_of(v), x.value());
}

void SkewMatrix::set_raw(std::size_t i, std::size_t j, std::uint64_t x) {
  if (i == j) {
    if (x != 0) throw MatrixError("nonzero diagonal entry at " + labels_[i]);
    return;
  }
  a_[i * size() + j] = x;
  a_[j * size() + i] = x;
}

std::vector<std::size_t> SkewMatrix::indices_of(const LabelSet& s) const {
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& v : s) idx.push_back(index_of(v));
  std::sort(idx.begin(), idx.end());
  return idx;
}

SkewMatrix SkewMatrix::principal_submatrix(const LabelSet& s) const {
  const auto idx = indices_of(s);
  std::vector<Label> labels;
  labels.reserve(idx.size());
  for (auto i : idx) labels.push_back(labels_[i]);
  SkewMatrix out(ctx_, std::move(labels));
  const std::size_t n = idx.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.a_[i * n + j] = raw(idx[i], idx[j]);
  }
  return out;
}

std::size_t SkewMatrix::rank() const {
  const auto all = iota(size());
  return dense::rank(ctx_, gather(*this, all, all));
}

bool SkewMatrix::is_nonsingular() const {
  if (size() % 2 == 1) return false;
  return rank() == size();
}

FieldElement SkewMatrix::determinant() const {
  const auto all = iota(size());
  return ctx_.element(dense::determinant(ctx_, gather(*this, all, all)));
}

FieldElement SkewMatrix::pfaffian() const {
  const auto all = iota(size());
  return ctx_.element(dense::pfaffian(ctx_, gather(*this, all, all)));
}

SkewMatrix SkewMatrix::pivot(const LabelSet& s) const {
  const auto sidx = indices_of(s);
  std::vector<std::size_t> ridx;
  {
    std::size_t k = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (k < sidx.size() && sidx[k] == i) {
        ++k;
      } else {
        ridx.push_back(i);
      }
    }
  }
  const auto binv = dense::inverse(ctx_, gather(*this, sidx, sidx));
  if (!binv) throw SingularPivotError("pivot block " + to_string(s) + " is singular");
  const dense::Mat c = gather(*this, sidx, ridx);

  // B^-1 C, the new upper-right block.
  dense::Mat bc(sidx.size(), ridx.size());
  for (std::size_t i = 0; i < sidx.size(); ++i) {
    for (std::size_t p = 0; p < sidx.size(); ++p) {
      const std::uint64_t b = (*binv)(i, p);
      if (b == 0) continue;
      for (std::size_t j = 0; j < ridx.size(); ++j) bc(i, j) ^= ctx_.mul_raw(b, c(p, j));
    }
  }

  SkewMatrix out(ctx_, labels_);
  for (std::size_t i = 0; i < sidx.size(); ++i) {
    for (std::size_t j = i + 1; j < sidx.size(); ++j) out.set_raw(sidx[i], sidx[j], (*binv)(i, j));
    for (std::size_t j = 0; j < ridx.size(); ++j) out.set_raw(sidx[i], ridx[j], bc(i, j));
  }
  // D + C^T B^-1 C
  for (std::size_t i = 0; i < ridx.size(); ++i) {
    for (std::size_t j = i + 1; j < ridx.size(); ++j) {
      std::uint64_t x = raw(ridx[i], ridx[j]);
      for (std::size_t p = 0; p < sidx.size(); ++p) {
        if (c(p, i) != 0 && bc(p, j) != 0) x ^= ctx_.mul_raw(c(p, i), bc(p, j));
      }
      out.set_raw(ridx[i], ridx[j], x);
    }
  }
  return out;
}

Graph SkewMatrix::support_graph() const {
  Graph g(labels_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (raw(i, j) != 0) g.add_edge(labels_[i], labels_[j]);
    }
  }
  return g;
}

std::vector<Label> SkewMatrix::column_basis(const std::vector<Label>& preferred) const {
  std::vector<std::size_t> order;
  std::vector<bool> seen(size(), false);
  for (const auto& v : preferred) {
    const std::size_t i = index_of(v);
    if (!seen[i]) {
      seen[i] = true;
      order.push_back(i);
    }
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (!seen[i]) order.push_back(i);
  }
  dense::IncrementalBasis basis(ctx_, size());
  std::vector<Label> out;
  for (auto j : order) {
    std::vector<std::uint64_t> col(size());
    for (std::size_t i = 0; i < size(); ++i) col[i] = raw(i, j);
    if (basis.add(std::move(col))) out.push_back(labels_[j]);
    if (basis.size() == size()) break;
  }
  return out;
}

std::size_t SkewMatrix::column_rank(const LabelSet& cols) const {
  return dense::rank(ctx_, gather(*this, iota(size()), indices_of(cols)));
}

}  // namespace dmkit
