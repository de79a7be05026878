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

#include "dmkit/graph.hpp"

namespace dmkit {

Graph::Graph(const std::vector<Label>& vertices) {
  for (const auto& v : vertices) add_vertex(v);
}

Graph::Graph(const std::vector<Label>& vertices, const std::vector<Edge>& edges)
    : Graph(vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_vertex(const Label& v) {
  if (!adj_.emplace(v, LabelSet{}).second) throw GraphError("duplicate vertex: " + v);
}

void Graph::add_edge(const Label& u, const Label& v) {
  if (u == v) throw GraphError("self-loop on " + u);
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) {
    throw GraphError("edge endpoint not in graph: " + u + "-" + v);
  }
  if (!iu->second.insert(v).second) throw GraphError("duplicate edge: " + u + "-" + v);
  iv->second.insert(u);
  ++num_edges_;
}

void Graph::remove_edge(const Label& u, const Label& v) {
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end() || iu->second.erase(v) == 0) {
    throw GraphError("no such edge: " + u + "-" + v);
  }
  iv->second.erase(u);
  --num_edges_;
}

void Graph::remove_vertex(const Label& v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw UnknownLabelError("unknown vertex: " + v);
  for (const auto& w : it->second) adj_[w].erase(v);
  num_edges_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(const Label& u, const Label& v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const LabelSet& Graph::neighbors(const Label& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw UnknownLabelError("unknown vertex: " + v);
  return it->second;
}

std::vector<Label> Graph::vertices() const {
  std::vector<Label> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

LabelSet Graph::vertex_set() const {
  LabelSet out;
  for (const auto& [v, _] : adj_) out.insert(out.end(), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [u, nb] : adj_) {
    for (const auto& v : nb) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(const LabelSet& keep) const {
  Graph g;
  for (const auto& v : keep) {
    if (!contains(v)) throw UnknownLabelError("unknown vertex: " + v);
    g.adj_.emplace(v, LabelSet{});
  }
  for (auto& [v, nb] : g.adj_) {
    for (const auto& w : adj_.at(v)) {
      if (keep.count(w) != 0) {
        nb.insert(w);
        if (v < w) ++g.num_edges_;
      }
    }
  }
  return g;
}

Graph Graph::without(const LabelSet& drop) const {
  return induced_subgraph(set_minus(vertex_set(), drop));
}

}  // namespace dmkit
