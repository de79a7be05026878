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

#ifndef DMKIT_GRAPH_HPP_
#define DMKIT_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmkit/types.hpp"

namespace dmkit {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Label, Label>;

// Simple undirected graph on labelled vertices. Vertices and neighbourhoods
// are kept in label order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<Label>& vertices);
  Graph(const std::vector<Label>& vertices, const std::vector<Edge>& edges);

  // Throws GraphError if the vertex already exists.
  void add_vertex(const Label& v);
  // Throws GraphError on loops, unknown endpoints or an existing edge.
  void add_edge(const Label& u, const Label& v);
  void remove_edge(const Label& u, const Label& v);
  void remove_vertex(const Label& v);

  bool contains(const Label& v) const { return adj_.count(v) != 0; }
  bool has_edge(const Label& u, const Label& v) const;
  const LabelSet& neighbors(const Label& v) const;
  std::size_t degree(const Label& v) const { return neighbors(v).size(); }

  std::vector<Label> vertices() const;
  LabelSet vertex_set() const;
  // Each edge once, as (smaller label, larger label), in sorted order.
  std::vector<Edge> edges() const;
  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  Graph induced_subgraph(const LabelSet& keep) const;
  Graph without(const LabelSet& drop) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::map<Label, LabelSet> adj_;
  std::size_t num_edges_ = 0;
};

}  // namespace dmkit

#endif  // DMKIT_GRAPH_HPP_
