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

// Delta-matroids built from graphs and matrices: matching delta-matroids,
// twisted matroids, and the delta-matroid of Mader-matchable terminal sets.

#ifndef DMKIT_CONSTRUCTIONS_HPP_
#define DMKIT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "dmkit/delta_matroid.hpp"
#include "dmkit/field.hpp"
#include "dmkit/graph.hpp"
#include "dmkit/types.hpp"

namespace dmkit {

class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Derived vertex names. These characters are reserved in user labels.
Label prime_label(const Label& v);                     // v'
Label clone_label(const Label& v);                     // v+
Label subdivision_label(const Label& s, const Label& t);  // s~t, endpoints sorted
Label pendant_label(const Label& t, std::size_t i);    // t^i
bool has_reserved_char(const Label& v);

// A graph with its terminals partitioned into blocks.
struct MaderNetwork {
  Graph graph;
  std::vector<LabelSet> partition;

  LabelSet terminals() const;
  LabelSet nonterminals() const;
  // Block index of every terminal.
  std::map<Label, std::size_t> block_of() const;
  // Throws NetworkError: empty or overlapping blocks, terminals not in the
  // graph.
  void validate() const;
  // The network restricted to terminals S (other terminals removed from the
  // graph, empty blocks dropped).
  MaderNetwork restricted_to(const LabelSet& s) const;
};

// S feasible iff G[S] has a perfect matching, with high probability.
DeltaMatroid matching_delta_matroid(const Graph& g, const FieldCtx& ctx, Rng& rng);

// A k x n matrix over GF(2^l) with labelled columns.
struct LinearMatrix {
  FieldCtx ctx;
  std::vector<Label> columns;
  std::vector<std::vector<FieldElement>> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t rank() const;
};

// For a basis B of M, the normal delta-matroid D(A_B) with
// A_B = [[0, N], [N^T, 0]], N = M[., B]^-1 M[., V \ B]; twisting it by B
// gives the bases of M. Throws DeltaMatroidError if B is not a basis.
DeltaMatroid twisted_matroid(const LinearMatrix& m, const LabelSet& basis);

// [[0, M], [M^T, 0]] on row_labels + columns: F containing every row label
// is feasible iff F minus the row labels is a basis of M.
DeltaMatroid artificial_basis_delta_matroid(const LinearMatrix& m,
                                            const std::vector<Label>& row_labels);

struct SplitGraph {
  Graph graph;
  std::map<Label, Label> prime;  // v -> v'
};

// Duplicates every v in S as v'. Edges inside S become u'v, uv'; an edge from
// outside S to v gains a copy to v'; every v in S gets the edge vv'.
SplitGraph split_graph(const Graph& g, const LabelSet& s);

// Adds a false twin v+ of v.
Graph clone_vertex(const Graph& g, const Label& v);

// Replaces every terminal-terminal edge st by a path s - s~t - t.
MaderNetwork subdivide_terminal_edges(const MaderNetwork& net);

// Adds pendants t^1..t^k to each t in T; the new terminals form k blocks
// {t^i : t in T}. Requires |T| = k.
MaderNetwork pendant_expansion(const Graph& g, const LabelSet& t, std::size_t k);

struct MaderRepresentation {
  // Ground T + U + U' where U are the non-terminals after subdivision.
  DeltaMatroid full;
  // Ground T: S feasible iff S is Mader matchable.
  DeltaMatroid contracted;
  std::map<Label, Label> primes;
  LabelSet subdivision;

  // The ground set of `full` standing for a vertex set S of the input graph.
  LabelSet lift(const LabelSet& s) const;
};

// Throws std::runtime_error if no nonsingular padding block is found in
// max_attempts random draws.
MaderRepresentation mader_delta_matroid(const MaderNetwork& net, const FieldCtx& ctx, Rng& rng,
                                        int max_attempts = 16);

// The full representation contracted by every non-terminal outside `keep`
// and its prime. Ground: T + keep + primes of keep. `keep` must consist of
// non-terminals of the subdivided network.
DeltaMatroid mader_partial_contraction(const MaderNetwork& net, const LabelSet& keep,
                                       const FieldCtx& ctx, Rng& rng, int max_attempts = 16);

}  // namespace dmkit

#endif  // DMKIT_CONSTRUCTIONS_HPP_
