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

#include "dmkit/constructions.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "dense.hpp"

namespace dmkit {
namespace {

dense::Mat to_dense(const LinearMatrix& m, const std::vector<std::size_t>& cols) {
  dense::Mat out(m.rows.size(), cols.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.rows[i][cols[j]].value();
  }
  return out;
}

void validate_linear(const LinearMatrix& m) {
  LabelSet seen;
  for (const auto& c : m.columns) {
    if (!seen.insert(c).second) throw MatrixError("duplicate column label: " + c);
  }
  for (const auto& row : m.rows) {
    if (row.size() != m.columns.size()) throw MatrixError("row length does not match column count");
    for (const auto& x : row) {
      if (x.bits() != m.ctx.bits()) throw MatrixError("matrix entry from a different field");
    }
  }
}

// Tutte-style matrix of the split, subdivided network with tied entries for
// non-terminal edges and a per-block factor on the primed terminal edges.
SkewMatrix mader_matrix(const MaderNetwork& sub, const FieldCtx& ctx, Rng& rng) {
  const LabelSet terminals = sub.terminals();
  const LabelSet inner = sub.nonterminals();
  std::vector<Label> labels(terminals.begin(), terminals.end());
  for (const auto& v : inner) {
    labels.push_back(v);
    labels.push_back(prime_label(v));
  }
  SkewMatrix a(ctx, std::move(labels));

  const auto block = sub.block_of();
  std::vector<FieldElement> z;
  for (std::size_t i = 0; i < sub.partition.size(); ++i) z.push_back(ctx.random_nonzero(rng));

  for (const auto& [u, v] : sub.graph.edges()) {
    const bool tu = terminals.count(u) != 0;
    const bool tv = terminals.count(v) != 0;
    if (tu && tv) throw NetworkError("terminal-terminal edge left after subdivision: " + u + "-" + v);
    if (!tu && !tv) {
      const FieldElement x = ctx.random_nonzero(rng);
      a.set(u, prime_label(v), x);
      a.set(prime_label(u), v, x);
      continue;
    }
    const Label& t = tu ? u : v;
    const Label& w = tu ? v : u;
    const FieldElement r = ctx.random_nonzero(rng);
    a.set(t, w, r);
    a.set(t, prime_label(w), r * z[block.at(t)]);
  }
  for (const auto& v : inner) a.set(v, prime_label(v), ctx.random_nonzero(rng));
  return a;
}

LabelSet with_primes(const LabelSet& s) {
  LabelSet out = s;
  for (const auto& v : s) out.insert(prime_label(v));
  return out;
}

}  // namespace

Label prime_label(const Label& v) { return v + "'"; }
Label clone_label(const Label& v) { return v + "+"; }
Label subdivision_label(const Label& s, const Label& t) { return s < t ? s + "~" + t : t + "~" + s; }
Label pendant_label(const Label& t, std::size_t i) { return t + "^" + std::to_string(i); }

bool has_reserved_char(const Label& v) { return v.find_first_of("'+~^") != Label::npos; }

LabelSet MaderNetwork::terminals() const {
  LabelSet out;
  for (const auto& b : partition) out.insert(b.begin(), b.end());
  return out;
}

LabelSet MaderNetwork::nonterminals() const { return set_minus(graph.vertex_set(), terminals()); }

std::map<Label, std::size_t> MaderNetwork::block_of() const {
  std::map<Label, std::size_t> out;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (const auto& t : partition[i]) out.emplace(t, i);
  }
  return out;
}

void MaderNetwork::validate() const {
  LabelSet seen;
  for (const auto& b : partition) {
    if (b.empty()) throw NetworkError("empty partition block");
    for (const auto& t : b) {
      if (!seen.insert(t).second) throw NetworkError("terminal in two blocks: " + t);
      if (!graph.contains(t)) throw NetworkError("terminal not in graph: " + t);
    }
  }
}

MaderNetwork MaderNetwork::restricted_to(const LabelSet& s) const {
  MaderNetwork out;
  out.graph = graph.without(set_minus(terminals(), s));
  for (const auto& b : partition) {
    LabelSet kept = set_intersection(b, s);
    if (!kept.empty()) out.partition.push_back(std::move(kept));
  }
  return out;
}

DeltaMatroid matching_delta_matroid(const Graph& g, const FieldCtx& ctx, Rng& rng) {
  SkewMatrix a(ctx, g.vertices());
  for (const auto& [u, v] : g.edges()) a.set(u, v, ctx.random_nonzero(rng));
  return DeltaMatroid(std::move(a));
}

std::size_t LinearMatrix::rank() const {
  validate_linear(*this);
  std::vector<std::size_t> all(columns.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return dense::rank(ctx, to_dense(*this, all));
}

DeltaMatroid twisted_matroid(const LinearMatrix& m, const LabelSet& basis) {
  validate_linear(m);
  std::vector<std::size_t> bidx;
  std::vector<std::size_t> ridx;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    (basis.count(m.columns[j]) != 0 ? bidx : ridx).push_back(j);
  }
  if (bidx.size() != basis.size()) throw UnknownLabelError("basis label not among the columns");
  if (bidx.size() != m.num_rows()) throw DeltaMatroidError("basis size differs from the row count");
  const auto binv = dense::inverse(m.ctx, to_dense(m, bidx));
  if (!binv) throw DeltaMatroidError(to_string(basis) + " is not a basis");
  const dense::Mat rest = to_dense(m, ridx);

  std::vector<Label> labels;
  for (auto j : bidx) labels.push_back(m.columns[j]);
  for (auto j : ridx) labels.push_back(m.columns[j]);
  SkewMatrix a(m.ctx, std::move(labels));
  const std::size_t k = bidx.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ridx.size(); ++j) {
      std::uint64_t x = 0;
      for (std::size_t p = 0; p < k; ++p) x ^= m.ctx.mul_raw((*binv)(i, p), rest(p, j));
      a.set_raw(i, k + j, x);
    }
  }
  return DeltaMatroid(std::move(a));
}

DeltaMatroid artificial_basis_delta_matroid(const LinearMatrix& m,
                                            const std::vector<Label>& row_labels) {
  validate_linear(m);
  if (row_labels.size() != m.num_rows()) throw MatrixError("row label count differs from the row count");
  std::vector<Label> labels = row_labels;
  labels.insert(labels.end(), m.columns.begin(), m.columns.end());
  SkewMatrix a(m.ctx, std::move(labels));
  const std::size_t k = row_labels.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m.columns.size(); ++j) a.set_raw(i, k + j, m.rows[i][j].value());
  }
  return DeltaMatroid(std::move(a));
}

SplitGraph split_graph(const Graph& g, const LabelSet& s) {
  for (const auto& v : s) {
    if (!g.contains(v)) throw UnknownLabelError("unknown vertex: " + v);
  }
  SplitGraph out;
  out.graph = Graph(g.vertices());
  for (const auto& v : s) {
    out.prime[v] = prime_label(v);
    out.graph.add_vertex(prime_label(v));
    out.graph.add_edge(v, prime_label(v));
  }
  for (const auto& [u, v] : g.edges()) {
    const bool su = s.count(u) != 0;
    const bool sv = s.count(v) != 0;
    if (su && sv) {
      out.graph.add_edge(prime_label(u), v);
      out.graph.add_edge(u, prime_label(v));
    } else {
      out.graph.add_edge(u, v);
      if (su) out.graph.add_edge(prime_label(u), v);
      if (sv) out.graph.add_edge(u, prime_label(v));
    }
  }
  return out;
}

Graph clone_vertex(const Graph& g, const Label& v) {
  Graph out = g;
  const Label c = clone_label(v);
  out.add_vertex(c);
  for (const auto& w : g.neighbors(v)) out.add_edge(c, w);
  return out;
}

MaderNetwork subdivide_terminal_edges(const MaderNetwork& net) {
  const LabelSet terminals = net.terminals();
  MaderNetwork out;
  out.partition = net.partition;
  out.graph = Graph(net.graph.vertices());
  for (const auto& [u, v] : net.graph.edges()) {
    if (terminals.count(u) != 0 && terminals.count(v) != 0) {
      const Label mid = subdivision_label(u, v);
      if (net.graph.contains(mid)) throw NetworkError("subdivision label already in use: " + mid);
      out.graph.add_vertex(mid);
      out.graph.add_edge(u, mid);
      out.graph.add_edge(mid, v);
    } else {
      out.graph.add_edge(u, v);
    }
  }
  return out;
}

MaderNetwork pendant_expansion(const Graph& g, const LabelSet& t, std::size_t k) {
  if (t.size() != k) throw NetworkError("pendant expansion needs exactly k terminals");
  MaderNetwork out;
  out.graph = g;
  out.partition.assign(k, LabelSet{});
  for (const auto& x : t) {
    if (!g.contains(x)) throw UnknownLabelError("unknown terminal: " + x);
    for (std::size_t i = 1; i <= k; ++i) {
      const Label p = pendant_label(x, i);
      out.graph.add_vertex(p);
      out.graph.add_edge(p, x);
      out.partition[i - 1].insert(p);
    }
  }
  return out;
}

LabelSet MaderRepresentation::lift(const LabelSet& s) const {
  LabelSet out;
  for (const auto& v : s) {
    if (!full.matrix().contains(v)) throw UnknownLabelError("unknown vertex: " + v);
    out.insert(v);
    auto it = primes.find(v);
    if (it != primes.end()) out.insert(it->second);
  }
  for (const auto& v : subdivision) {
    out.insert(v);
    out.insert(primes.at(v));
  }
  return out;
}

MaderRepresentation mader_delta_matroid(const MaderNetwork& net, const FieldCtx& ctx, Rng& rng,
                                        int max_attempts) {
  net.validate();
  const MaderNetwork sub = subdivide_terminal_edges(net);
  const LabelSet inner = sub.nonterminals();
  const LabelSet padding = with_primes(inner);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    DeltaMatroid full(mader_matrix(sub, ctx, rng));
    if (!is_feasible(full, padding)) continue;
    DeltaMatroid contracted = contract(full, padding);
    std::map<Label, Label> primes;
    for (const auto& v : inner) primes.emplace(v, prime_label(v));
    return MaderRepresentation{std::move(full), std::move(contracted), std::move(primes),
                               set_minus(sub.graph.vertex_set(), net.graph.vertex_set())};
  }
  throw std::runtime_error("no nonsingular padding block after " + std::to_string(max_attempts) +
                           " random draws");
}

DeltaMatroid mader_partial_contraction(const MaderNetwork& net, const LabelSet& keep,
                                       const FieldCtx& ctx, Rng& rng, int max_attempts) {
  net.validate();
  const MaderNetwork sub = subdivide_terminal_edges(net);
  const LabelSet inner = sub.nonterminals();
  if (!is_subset(keep, inner)) throw NetworkError("kept vertices must be non-terminals");
  const LabelSet padding = with_primes(set_minus(inner, keep));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    DeltaMatroid full(mader_matrix(sub, ctx, rng));
    if (!is_feasible(full, padding)) continue;
    return contract(full, padding);
  }
  throw std::runtime_error("no nonsingular padding block after " + std::to_string(max_attempts) +
                           " random draws");
}

}  // namespace dmkit
