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

#include "dmkit/sparsifier.hpp"

#include <iterator>
#include <map>

#include "dmkit/repsets.hpp"

namespace dmkit {
namespace {

bool is_clique(const Graph& g, const LabelSet& s) {
  for (auto i = s.begin(); i != s.end(); ++i) {
    for (auto j = std::next(i); j != s.end(); ++j) {
      if (!g.has_edge(*i, *j)) return false;
    }
  }
  return true;
}

// Adds a false twin for every vertex in `vs`, each adjacent to the original
// neighbourhood only.
MaderNetwork with_clones(const MaderNetwork& net, const LabelSet& vs) {
  MaderNetwork out = net;
  for (const auto& v : vs) {
    const Label c = clone_label(v);
    if (net.graph.contains(c)) throw NetworkError("clone label already in use: " + c);
    out.graph.add_vertex(c);
  }
  for (const auto& v : vs) {
    for (const auto& w : net.graph.neighbors(v)) out.graph.add_edge(clone_label(v), w);
  }
  return out;
}

struct LoopConfig {
  LabelSet terminals;       // sieve terminals
  LabelSet protect;         // never deleted
  LabelSet avoid;           // never an endpoint of an added edge
  std::size_t rounds = 0;
  RepsetMode mode = RepsetMode::kCardinality;
};

MaderNetwork run_loop(MaderNetwork h, const LoopConfig& cfg, const FieldCtx& ctx, Rng& rng,
                      SparsifyReport& report) {
  for (;;) {
    if (auto v = find_simplicial_nonterminal(h.graph, cfg.terminals, cfg.protect)) {
      h.graph.remove_vertex(*v);
      report.vertices_removed.push_back(*v);
      continue;
    }
    const LabelSet inner = h.nonterminals();
    if (inner.empty()) break;
    const LabelSet marked = mark_dangerous(h, ctx, rng, cfg.rounds, cfg.mode);
    ++report.rounds;
    report.marked = marked;
    std::optional<Edge> added;
    for (const auto& v : set_minus(inner, marked)) {
      if ((added = find_induced_p3(h.graph, v, cfg.avoid))) break;
    }
    if (!added) break;
    h.graph.add_edge(added->first, added->second);
    report.edges_added.push_back(*added);
  }
  return h;
}

}  // namespace

std::optional<Label> find_simplicial_nonterminal(const Graph& g, const LabelSet& terminals,
                                                 const LabelSet& protect) {
  for (const auto& v : g.vertices()) {
    if (terminals.count(v) != 0 || protect.count(v) != 0) continue;
    if (is_clique(g, g.neighbors(v))) return v;
  }
  return std::nullopt;
}

std::optional<Edge> find_induced_p3(const Graph& g, const Label& v, const LabelSet& avoid) {
  const LabelSet& nb = g.neighbors(v);
  for (auto i = nb.begin(); i != nb.end(); ++i) {
    if (avoid.count(*i) != 0) continue;
    for (auto j = std::next(i); j != nb.end(); ++j) {
      if (avoid.count(*j) != 0) continue;
      if (!g.has_edge(*i, *j)) return Edge{*i, *j};
    }
  }
  return std::nullopt;
}

LabelSet mark_dangerous(const MaderNetwork& net, const FieldCtx& ctx, Rng& rng, std::size_t rounds,
                        RepsetMode mode) {
  net.validate();
  const LabelSet inner = net.nonterminals();
  LabelSet marked;
  if (inner.empty() || rounds == 0) return marked;

  const MaderNetwork cloned = with_clones(net, inner);
  LabelSet clones;
  for (const auto& v : inner) clones.insert(clone_label(v));
  const DeltaMatroid d = mader_partial_contraction(cloned, clones, ctx, rng);

  QSetFamily fam;
  fam.q = 2;
  std::vector<Label> owner;
  for (const auto& v : inner) {
    fam.sets.push_back({clone_label(v), prime_label(clone_label(v))});
    owner.push_back(v);
  }
  const LabelSet terminals = net.terminals();
  for (std::size_t r = 0; r < rounds && !fam.sets.empty(); ++r) {
    const RepresentativeSet rep = mode == RepsetMode::kRank ? dm_repset_rank(d, terminals, fam)
                                                            : dm_repset_cardinality(d, terminals, fam);
    std::vector<bool> drop(fam.sets.size(), false);
    for (auto i : rep.indices) {
      marked.insert(owner[i]);
      drop[i] = true;
    }
    QSetFamily next;
    next.q = fam.q;
    std::vector<Label> next_owner;
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      if (drop[i]) continue;
      next.sets.push_back(fam.sets[i]);
      next_owner.push_back(owner[i]);
    }
    fam = std::move(next);
    owner = std::move(next_owner);
  }
  return marked;
}

std::uint64_t sparsify_size_bound(std::size_t k) {
  return k + 3 * k * monomial_count(2 * k + 1, 2);
}

std::uint64_t all_partitions_size_bound(std::size_t k) {
  return k + 6 * k * monomial_count(16 * k + 1, 2);
}

std::pair<MaderNetwork, SparsifyReport> sparsify(const MaderNetwork& net, const FieldCtx& ctx,
                                                 const SparsifyOptions& opts) {
  net.validate();
  SparsifyReport report;
  report.seed = opts.seed;
  Rng rng(opts.seed);
  LoopConfig cfg;
  cfg.terminals = net.terminals();
  cfg.rounds = opts.rounds.value_or(3 * cfg.terminals.size());
  MaderNetwork out = run_loop(net, cfg, ctx, rng, report);
  report.final_size = out.graph.num_vertices();
  report.size_bound = sparsify_size_bound(cfg.terminals.size());
  return {std::move(out), std::move(report)};
}

std::pair<Graph, SparsifyReport> sparsify_all_partitions(const Graph& g, const LabelSet& t,
                                                         const FieldCtx& ctx,
                                                         const SparsifyOptions& opts) {
  for (const auto& v : t) {
    if (!g.contains(v)) throw UnknownLabelError("unknown terminal: " + v);
  }
  SparsifyReport report;
  report.seed = opts.seed;
  Rng rng(opts.seed);
  const std::size_t k = t.size();
  MaderNetwork expanded = pendant_expansion(g, t, k);
  LoopConfig cfg;
  cfg.terminals = expanded.terminals();
  cfg.protect = t;
  cfg.avoid = cfg.terminals;
  cfg.rounds = opts.rounds.value_or(6 * k);
  cfg.mode = RepsetMode::kRank;
  MaderNetwork h = run_loop(std::move(expanded), cfg, ctx, rng, report);
  Graph out = h.graph.without(cfg.terminals);
  report.final_size = out.num_vertices();
  report.size_bound = all_partitions_size_bound(k);
  return {std::move(out), std::move(report)};
}

std::pair<Graph, SparsifyReport> multicut_sparsifier(const Graph& g, const LabelSet& t,
                                                     const FieldCtx& ctx,
                                                     const SparsifyOptions& opts) {
  return sparsify_all_partitions(g, t, ctx, opts);
}

}  // namespace dmkit
