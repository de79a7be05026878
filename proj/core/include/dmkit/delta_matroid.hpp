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

#ifndef DMKIT_DELTA_MATROID_HPP_
#define DMKIT_DELTA_MATROID_HPP_

#include <cstddef>
#include <stdexcept>

#include "dmkit/skew_matrix.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

class DeltaMatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A delta-matroid given by a skew matrix A and a twist set W: F is feasible
// iff A[F xor W] is nonsingular. With W empty this is the delta-matroid
// directly represented by A.
class DeltaMatroid {
 public:
  // Throws UnknownLabelError if twist is not contained in the matrix labels.
  explicit DeltaMatroid(SkewMatrix matrix, LabelSet twist = {});

  const SkewMatrix& matrix() const { return matrix_; }
  const LabelSet& twist() const { return twist_; }
  LabelSet ground() const { return matrix_.label_set(); }
  bool is_normal() const { return twist_.empty(); }

 private:
  SkewMatrix matrix_;
  LabelSet twist_;
};

// Throws UnknownLabelError if F is not contained in the ground set.
bool is_feasible(const DeltaMatroid& d, const LabelSet& f);

// Feasible family becomes {F xor S}; only the twist set changes.
DeltaMatroid twist(const DeltaMatroid& d, const LabelSet& s);
// Same family as twist(d, s), but represented without a twist set by
// pivoting. Requires d normal and s feasible (throws DeltaMatroidError).
DeltaMatroid twist_by_pivot(const DeltaMatroid& d, const LabelSet& s);

// Feasible sets avoiding S. A normal d stays normal, and so does a twisted d
// whose block on the twisted part of S is nonsingular. Throws
// DeltaMatroidError if no feasible set avoids S.
DeltaMatroid delete_elements(const DeltaMatroid& d, const LabelSet& s);
// {F \ S : F feasible, S subset of F}. Throws DeltaMatroidError unless S is
// feasible.
DeltaMatroid contract(const DeltaMatroid& d, const LabelSet& s);

// max |F cap T| over feasible F, i.e. the column rank of A[., T]. Requires
// d normal.
std::size_t rank_of(const DeltaMatroid& d, const LabelSet& t);

// A feasible B meeting T in rank_of(d, T) elements and minimal with that
// property; |B| <= 2 rank_of(d, T). Requires d normal.
LabelSet minimal_feasible_spanning(const DeltaMatroid& d, const LabelSet& t);

// Brute force over all subsets. Throws GuardError if the ground set exceeds
// max_ground elements.
Family enumerate_feasible(const DeltaMatroid& d, std::size_t max_ground = 20);

// Symmetric exchange: for all A, B in the family and x in A xor B there is a
// y in A xor B (possibly x) with A xor {x, y} in the family.
bool check_exchange_axiom(const Family& family);

}  // namespace dmkit

#endif  // DMKIT_DELTA_MATROID_HPP_
