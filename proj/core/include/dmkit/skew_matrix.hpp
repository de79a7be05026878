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

#ifndef DMKIT_SKEW_MATRIX_HPP_
#define DMKIT_SKEW_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dmkit/field.hpp"
#include "dmkit/graph.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

class MatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularPivotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Symmetric matrix with zero diagonal over GF(2^l), rows and columns indexed
// by labels. In characteristic 2 this is exactly a skew-symmetric matrix.
class SkewMatrix {
 public:
  // The zero matrix on the given labels. Throws MatrixError on duplicates.
  SkewMatrix(FieldCtx ctx, std::vector<Label> labels);

  // Throws MatrixError unless rows is square, symmetric and zero on the
  // diagonal, with every entry in ctx.
  static SkewMatrix from_rows(FieldCtx ctx, std::vector<Label> labels,
                              const std::vector<std::vector<FieldElement>>& rows);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  LabelSet label_set() const { return LabelSet(labels_.begin(), labels_.end()); }
  bool contains(const Label& v) const { return index_.count(v) != 0; }
  // Throws UnknownLabelError.
  std::size_t index_of(const Label& v) const;

  FieldElement at(const Label& u, const Label& v) const;
  FieldElement at(std::size_t i, std::size_t j) const { return ctx_.element(raw(i, j)); }
  std::uint64_t raw(std::size_t i, std::size_t j) const { return a_[i * size() + j]; }

  // Sets both (u,v) and (v,u). Throws MatrixError for a nonzero diagonal entry.
  void set(const Label& u, const Label& v, const FieldElement& x);
  void set_raw(std::size_t i, std::size_t j, std::uint64_t x);

  // Rows and columns restricted to S, in this matrix's label order.
  SkewMatrix principal_submatrix(const LabelSet& s) const;

  std::size_t rank() const;
  bool is_nonsingular() const;
  FieldElement determinant() const;
  FieldElement pfaffian() const;

  // Principal pivot transform by S. Throws SingularPivotError if A[S] is
  // singular.
  SkewMatrix pivot(const LabelSet& s) const;

  Graph support_graph() const;

  // Greedy column basis, trying columns in `preferred` order first and then
  // the remaining labels in matrix order.
  std::vector<Label> column_basis(const std::vector<Label>& preferred = {}) const;
  // Rank of the column submatrix A[., cols].
  std::size_t column_rank(const LabelSet& cols) const;

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
    return a.ctx_ == b.ctx_ && a.labels_ == b.labels_ && a.a_ == b.a_;
  }
  friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) { return !(a == b); }

 private:
  std::vector<std::size_t> indices_of(const LabelSet& s) const;

  FieldCtx ctx_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<std::uint64_t> a_;
};

}  // namespace dmkit

#endif  // DMKIT_SKEW_MATRIX_HPP_
