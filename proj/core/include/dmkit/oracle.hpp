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

// Exhaustive reference implementations. Everything here is exponential and
// guarded by hard size limits; exceeding one throws OracleSizeError.

#ifndef DMKIT_ORACLE_HPP_
#define DMKIT_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dmkit/constructions.hpp"
#include "dmkit/delta_matroid.hpp"
#include "dmkit/field.hpp"
#include "dmkit/graph.hpp"
#include "dmkit/repsets.hpp"
#include "dmkit/skew_matrix.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

class OracleSizeError : public GuardError {
 public:
  using GuardError::GuardError;
};

inline constexpr std::size_t kMatchingLimit = 24;
inline constexpr std::size_t kPackingLimit = 16;
inline constexpr std::size_t kCutLimit = 14;

bool has_perfect_matching(const Graph& g, std::size_t max_vertices = kMatchingLimit);
// All S with a perfect matching in G[S].
Family matching_family(const Graph& g, std::size_t max_vertices = 20);

struct PathPacking {
  std::vector<std::vector<Label>> paths;

  LabelSet endpoints() const;
  std::size_t size() const { return paths.size(); }
};

// A packing of vertex-disjoint paths whose endpoint set is exactly S, each
// path joining terminals of different blocks through non-terminals only.
std::optional<PathPacking> find_mader_packing(const MaderNetwork& net, const LabelSet& s,
                                              std::size_t max_vertices = kPackingLimit);
bool mader_matchable(const MaderNetwork& net, const LabelSet& s,
                     std::size_t max_vertices = kPackingLimit);
// All matchable S subset of T.
Family mader_family(const MaderNetwork& net, std::size_t max_vertices = kPackingLimit);

// A maximum packing and its size.
PathPacking max_mader_packing(const MaderNetwork& net, std::size_t max_vertices = kPackingLimit);
std::size_t packing_number(const MaderNetwork& net, std::size_t max_vertices = kPackingLimit);
// |S| - 2 nu of the network with the terminals outside S removed.
std::size_t deficiency(const MaderNetwork& net, const LabelSet& s,
                       std::size_t max_vertices = kPackingLimit);

// Smallest vertex set (terminals allowed) whose removal leaves no component
// meeting two blocks.
LabelSet min_vertex_multiway_cut_set(const MaderNetwork& net, std::size_t max_vertices = kCutLimit);
std::size_t min_vertex_multiway_cut(const MaderNetwork& net, std::size_t max_vertices = kCutLimit);

// Maximum number of vertex-disjoint paths from a to b (Menger).
std::size_t max_vertex_disjoint_paths(const Graph& g, const LabelSet& a, const LabelSet& b);

struct MimicResult {
  bool ok = true;
  // First subset (in enumeration order) on which the networks disagree.
  std::optional<LabelSet> witness;
  bool matchable_in_a = false;
  bool matchable_in_b = false;
};

// Throws NetworkError if the terminal partitions differ.
MimicResult check_mimicking(const MaderNetwork& a, const MaderNetwork& b,
                            std::size_t max_vertices = kPackingLimit);

// Sum over perfect matchings of the support graph; characteristic 2.
FieldElement pfaffian_by_matchings(const SkewMatrix& a, std::size_t max_size = 14);
// Sum over permutations; characteristic 2.
FieldElement determinant_by_permutations(const SkewMatrix& a, std::size_t max_size = 10);

// Delta-matroid representative-set instance with its source graph.
struct RepsetInstance {
  Graph graph;
  DeltaMatroid dm;
  LabelSet terminals;
  QSetFamily family;
};

// Perfect matching t_i u_i, matching delta-matroid, T = {t_i}, all q-subsets
// of {u_i}. Requires k >= q >= 1.
RepsetInstance gen_lb_repairs(std::size_t k, std::size_t q, const FieldCtx& ctx, Rng& rng);
// K_k on v_i with pendants u_i and w_i; the delta-matroid is the Tutte matrix
// pivoted by {v_i} + {w_i} and restricted to {u_i} + {w_i}; T = {w_i}, all
// q-subsets of {u_i}. Requires k >= q >= 1, both even.
RepsetInstance gen_lb_extends(std::size_t k, std::size_t q, const FieldCtx& ctx, Rng& rng);

// K4 on a, b, c, d with three terminals hanging off a in one block and one
// terminal on each of b, c, d in singleton blocks.
MaderNetwork k4_pendants();

// n vertices, the first k of them terminals spread over `blocks` nonempty
// blocks; each pair is an edge with probability p.
MaderNetwork random_network(std::size_t n, std::size_t k, std::size_t blocks, double p, Rng& rng);

// All set partitions of s.
std::vector<std::vector<LabelSet>> set_partitions(const LabelSet& s);

// All q-subsets of s in lexicographic order.
Family subsets_of_size(const std::vector<Label>& s, std::size_t q);

}  // namespace dmkit

#endif  // DMKIT_ORACLE_HPP_
