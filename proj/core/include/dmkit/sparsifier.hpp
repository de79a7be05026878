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

// Terminal-preserving graph reduction.
//
// The main loop deletes simplicial non-terminals; when none is left it marks
// the non-terminals whose false twin could make a new terminal set
// matchable, and turns an unmarked vertex's neighbourhood towards a clique
// by adding one edge of an induced path u-v-w. It stops once every
// non-terminal is marked.

#ifndef DMKIT_SPARSIFIER_HPP_
#define DMKIT_SPARSIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dmkit/constructions.hpp"
#include "dmkit/field.hpp"
#include "dmkit/graph.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

enum class RepsetMode { kCardinality, kRank };

struct SparsifyOptions {
  std::uint64_t seed = 1;
  // Overrides the number of marking rounds (3|T|, or 6|T| for the
  // all-partitions variant).
  std::optional<std::size_t> rounds;
};

struct SparsifyReport {
  std::size_t rounds = 0;  // marking passes
  LabelSet marked;         // marked set of the last pass
  std::vector<Edge> edges_added;
  std::vector<Label> vertices_removed;
  std::uint64_t seed = 0;
  std::size_t final_size = 0;
  std::uint64_t size_bound = 0;
};

// Lowest non-terminal outside `protect` whose neighbourhood is a clique.
std::optional<Label> find_simplicial_nonterminal(const Graph& g, const LabelSet& terminals,
                                                 const LabelSet& protect = {});

// Lowest pair of non-adjacent neighbours (u, w) of v, u < w, both outside
// `avoid`.
std::optional<Edge> find_induced_p3(const Graph& g, const Label& v, const LabelSet& avoid = {});

// Non-terminals v such that sieving the pairs {v+, v+'} of their clones
// retains v within the given number of rounds.
LabelSet mark_dangerous(const MaderNetwork& net, const FieldCtx& ctx, Rng& rng,
                        std::size_t rounds, RepsetMode mode = RepsetMode::kCardinality);

// |T| + 3|T| binom(2|T| + 3, 2).
std::uint64_t sparsify_size_bound(std::size_t k);
// k + 6k binom(16k + 3, 2).
std::uint64_t all_partitions_size_bound(std::size_t k);

std::pair<MaderNetwork, SparsifyReport> sparsify(const MaderNetwork& net, const FieldCtx& ctx,
                                                 const SparsifyOptions& opts = {});

// Preserves the packing number for every partition of T.
std::pair<Graph, SparsifyReport> sparsify_all_partitions(const Graph& g, const LabelSet& t,
                                                         const FieldCtx& ctx,
                                                         const SparsifyOptions& opts = {});

std::pair<Graph, SparsifyReport> multicut_sparsifier(const Graph& g, const LabelSet& t,
                                                     const FieldCtx& ctx,
                                                     const SparsifyOptions& opts = {});

}  // namespace dmkit

#endif  // DMKIT_SPARSIFIER_HPP_
