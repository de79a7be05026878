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

// Representative sets by sieving polynomials.
//
// Every item carries a vector over GF(2^l). A subset of items that is a
// linear basis of the items' monomial-evaluation vectors keeps, for every
// polynomial of bounded degree, some item on which it does not vanish.
// Processing items by increasing weight keeps a lightest such item.

#ifndef DMKIT_REPSETS_HPP_
#define DMKIT_REPSETS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dmkit/constructions.hpp"
#include "dmkit/delta_matroid.hpp"
#include "dmkit/field.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

// Raised when a monomial basis would exceed the configured size.
class MonomialBoundError : public GuardError {
 public:
  using GuardError::GuardError;
};

inline constexpr std::uint64_t kMaxMonomials = 1'000'000;

// Monomials of total degree <= d in r variables, binom(r + d, d). Throws
// MonomialBoundError if the value does not fit in 64 bits.
std::uint64_t monomial_count(std::uint64_t r, std::uint64_t d);
// Monomials of total degree exactly d, binom(r + d - 1, d).
std::uint64_t homogeneous_monomial_count(std::uint64_t r, std::uint64_t d);

struct SieveInstance {
  FieldCtx ctx;
  std::size_t arity = 0;
  std::size_t degree = 0;
  // Only monomials of degree exactly `degree` are used.
  bool homogeneous = false;
  std::vector<Label> items;
  std::vector<std::vector<FieldElement>> vectors;
  // Empty, or one weight per item.
  std::vector<double> weights;

  // Throws std::invalid_argument on inconsistent sizes or fields.
  void validate() const;
  std::uint64_t monomials() const;
};

// Evaluates every monomial of the instance's degree envelope at x, in a
// fixed order.
std::vector<std::uint64_t> monomial_vector(const FieldCtx& ctx, const std::vector<std::uint64_t>& x,
                                           std::size_t degree, bool homogeneous);

// Indices of the retained items in processing order (ascending weight, ties
// by input order). Throws MonomialBoundError above max_monomials.
std::vector<std::size_t> representative_basis(const SieveInstance& inst,
                                              std::uint64_t max_monomials = kMaxMonomials);

// Concatenated vectors; degree d1 + d2.
SieveInstance sieve_intersect(const SieveInstance& a, const SieveInstance& b);
// Concatenated vectors; degree max(d1, d2).
SieveInstance sieve_union(const SieveInstance& a, const SieveInstance& b);

struct QSetFamily {
  std::size_t q = 0;
  Family sets;
  std::vector<double> weights;

  // Throws std::invalid_argument unless every set has q elements and the
  // weights match.
  void validate() const;
  QSetFamily subset(const std::vector<std::size_t>& indices) const;
};

struct RepresentativeSet {
  QSetFamily retained;
  std::vector<std::size_t> indices;  // into the input family, ascending
  std::uint64_t bound = 0;
  std::size_t arity = 0;
  std::size_t degree = 0;
};

// q-sets Y such that every X with some extender in fam (X cap Y empty, X + Y
// a basis) keeps one. M must have full row rank and q <= rows.
RepresentativeSet matroid_representative_set(const LinearMatrix& m, const QSetFamily& fam,
                                             std::uint64_t max_monomials = kMaxMonomials);

// Keeps, for every X subset of T with an extender in fam (X cap Y empty,
// X + Y feasible), one extender of minimum weight. Vectors are over all of T.
RepresentativeSet dm_repset_cardinality(const DeltaMatroid& d, const LabelSet& t,
                                        const QSetFamily& fam,
                                        std::uint64_t max_monomials = kMaxMonomials);

// Same contract; vectors only over a minimal feasible spanning set of T, so
// the size depends on the rank of T rather than on |T|.
RepresentativeSet dm_repset_rank(const DeltaMatroid& d, const LabelSet& t, const QSetFamily& fam,
                                 std::uint64_t max_monomials = kMaxMonomials);

// True iff Y extends X in d.
bool extends(const DeltaMatroid& d, const LabelSet& x, const LabelSet& y);

}  // namespace dmkit

#endif  // DMKIT_REPSETS_HPP_
