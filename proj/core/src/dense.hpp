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

// Raw-value dense kernels shared by the matrix and sieving code. Entries are
// plain uint64_t values interpreted in a given FieldCtx.

#ifndef DMKIT_SRC_DENSE_HPP_
#define DMKIT_SRC_DENSE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dmkit/field.hpp"

namespace dmkit::dense {

struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

std::size_t rank(const FieldCtx& f, Mat m);
std::uint64_t determinant(const FieldCtx& f, Mat m);
// nullopt if singular.
std::optional<Mat> inverse(const FieldCtx& f, const Mat& m);
// m must be symmetric with zero diagonal. Returns 0 for odd order, 1 for 0x0.
std::uint64_t pfaffian(const FieldCtx& f, Mat m);

// Row-echelon accumulator: feeds vectors one at a time and reports whether
// each one is independent of those accepted so far.
class IncrementalBasis {
 public:
  IncrementalBasis(const FieldCtx& f, std::size_t dim) : f_(f), dim_(dim) {}

  // Returns true and stores the vector if it is independent.
  bool add(std::vector<std::uint64_t> v);
  bool is_independent(std::vector<std::uint64_t> v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<std::uint64_t>& v) const;

  FieldCtx f_;
  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> rows_;  // each normalised at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace dmkit::dense

#endif  // DMKIT_SRC_DENSE_HPP_
