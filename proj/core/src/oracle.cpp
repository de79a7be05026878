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

#include "dmkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

namespace dmkit {
namespace {

using Mask = std::uint32_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Graph with vertices renumbered 0..n-1 in label order.
struct Indexed {
  std::vector<Label> labels;
  std::map<Label, int> index;
  std::vector<Mask> adj;

  Indexed(const Graph& g, std::size_t limit, const char* what) {
    if (g.num_vertices() > limit) {
      throw OracleSizeError(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                            " vertices exceed the limit of " + std::to_string(limit));
    }
    labels = g.vertices();
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
    adj.assign(labels.size(), 0);
    for (const auto& [u, v] : g.edges()) {
      adj[index[u]] |= bit(index[v]);
      adj[index[v]] |= bit(index[u]);
    }
  }

  Mask mask_of(const LabelSet& s) const {
    Mask m = 0;
    for (const auto& v : s) {
      auto it = index.find(v);
      if (it == index.end()) throw UnknownLabelError("unknown vertex: " + v);
      m |= bit(it->second);
    }
    return m;
  }

  LabelSet set_of(Mask m) const {
    LabelSet out;
    for (; m != 0; m &= m - 1) out.insert(labels[lowest(m)]);
    return out;
  }
};

bool perfect_matching_in(const std::vector<Mask>& adj, Mask left) {
  if (left == 0) return true;
  const int v = lowest(left);
  const Mask rest = left & ~bit(v);
  for (Mask c = adj[v] & rest; c != 0; c &= c - 1) {
    if (perfect_matching_in(adj, rest & ~bit(lowest(c)))) return true;
  }
  return false;
}

class PackingSearch {
 public:
  PackingSearch(const MaderNetwork& net, std::size_t limit)
      : g_(net.graph, limit, "Mader packing oracle"), block_(g_.labels.size(), -1) {
    net.validate();
    for (const auto& [t, b] : net.block_of()) {
      const int i = g_.index.at(t);
      block_[i] = static_cast<int>(b);
      terminals_ |= bit(i);
    }
  }

  const Indexed& graph() const { return g_; }
  Mask terminals() const { return terminals_; }

  std::optional<PathPacking> find(Mask s) {
    if ((s & ~terminals_) != 0) throw NetworkError("matchable set contains a non-terminal");
    target_ = s;
    failed_.clear();
    paths_.clear();
    if (!solve(0)) return std::nullopt;
    PathPacking out;
    for (const auto& p : paths_) {
      std::vector<Label> path;
      for (int v : p) path.push_back(g_.labels[v]);
      out.paths.push_back(std::move(path));
    }
    return out;
  }

 private:
  bool solve(Mask used) {
    const Mask remaining = target_ & ~used;
    if (remaining == 0) return true;
    if (failed_.count(used) != 0) return false;
    const int s = lowest(remaining);
    paths_.push_back({s});
    if (extend(s, used | bit(s))) return true;
    paths_.pop_back();
    failed_.insert(used);
    return false;
  }

  bool extend(int cur, Mask used) {
    const int start = paths_.back().front();
    for (Mask c = g_.adj[cur] & ~used; c != 0; c &= c - 1) {
      const int w = lowest(c);
      if ((terminals_ & bit(w)) != 0) {
        if ((target_ & bit(w)) == 0 || block_[w] == block_[start]) continue;
        paths_.back().push_back(w);
        if (solve(used | bit(w))) return true;
        paths_.back().pop_back();
      } else {
        paths_.back().push_back(w);
        if (extend(w, used | bit(w))) return true;
        paths_.back().pop_back();
      }
    }
    return false;
  }

  Indexed g_;
  std::vector<int> block_;
  Mask terminals_ = 0;
  Mask target_ = 0;
  std::unordered_set<Mask> failed_;
  std::vector<std::vector<int>> paths_;
};

std::vector<Mask> submasks_by_size_desc(Mask m) {
  std::vector<Mask> out;
  for (Mask s = m;; s = (s - 1) & m) {
    out.push_back(s);
    if (s == 0) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  return out;
}

bool separates(const Indexed& g, const std::vector<int>& block, Mask removed) {
  const int n = static_cast<int>(g.labels.size());
  Mask seen = removed;
  for (int v = 0; v < n; ++v) {
    if ((seen & bit(v)) != 0) continue;
    int found = -1;
    Mask frontier = bit(v);
    seen |= bit(v);
    while (frontier != 0) {
      const int u = lowest(frontier);
      frontier &= frontier - 1;
      if (block[u] >= 0) {
        if (found >= 0 && found != block[u]) return false;
        found = block[u];
      }
      const Mask next = g.adj[u] & ~seen;
      seen |= next;
      frontier |= next;
    }
  }
  return true;
}

void partitions_rec(const std::vector<Label>& items, std::size_t i, std::vector<LabelSet>& cur,
                    std::vector<std::vector<LabelSet>>& out) {
  if (i == items.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].insert(items[i]);
    partitions_rec(items, i + 1, cur, out);
    cur[b].erase(items[i]);
  }
  cur.push_back(LabelSet{items[i]});
  partitions_rec(items, i + 1, cur, out);
  cur.pop_back();
}

std::uint64_t pf_rec(const SkewMatrix& a, const FieldCtx& f, Mask left) {
  if (left == 0) return 1;
  const int i = lowest(left);
  const Mask rest = left & ~bit(i);
  std::uint64_t sum = 0;
  for (Mask c = rest; c != 0; c &= c - 1) {
    const int j = lowest(c);
    const std::uint64_t x = a.raw(i, j);
    if (x == 0) continue;
    const std::uint64_t sub = pf_rec(a, f, rest & ~bit(j));
    if (sub != 0) sum ^= f.mul_raw(x, sub);
  }
  return sum;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> c(q);
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = q;
    while (i > 0 && c[i - 1] == n - q + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < q; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<Label> numbered(const std::string& prefix, std::size_t k) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

bool has_perfect_matching(const Graph& g, std::size_t max_vertices) {
  const Indexed ig(g, max_vertices, "perfect matching oracle");
  const Mask all = ig.labels.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << ig.labels.size()) - 1);
  if (std::popcount(all) % 2 == 1) return false;
  return perfect_matching_in(ig.adj, all);
}

Family matching_family(const Graph& g, std::size_t max_vertices) {
  const Indexed ig(g, max_vertices, "matching family oracle");
  const std::uint64_t total = std::uint64_t{1} << ig.labels.size();
  Family out;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (std::popcount(m) % 2 == 1) continue;
    if (perfect_matching_in(ig.adj, static_cast<Mask>(m))) out.push_back(ig.set_of(static_cast<Mask>(m)));
  }
  return canonical(std::move(out));
}

LabelSet PathPacking::endpoints() const {
  LabelSet out;
  for (const auto& p : paths) {
    if (p.empty()) continue;
    out.insert(p.front());
    out.insert(p.back());
  }
  return out;
}

std::optional<PathPacking> find_mader_packing(const MaderNetwork& net, const LabelSet& s,
                                              std::size_t max_vertices) {
  PackingSearch search(net, max_vertices);
  const Mask m = search.graph().mask_of(s);
  if ((m & ~search.terminals()) != 0) throw std::invalid_argument(to_string(s) + " is not a set of terminals");
  return search.find(m);
}

bool mader_matchable(const MaderNetwork& net, const LabelSet& s, std::size_t max_vertices) {
  return find_mader_packing(net, s, max_vertices).has_value();
}

Family mader_family(const MaderNetwork& net, std::size_t max_vertices) {
  PackingSearch search(net, max_vertices);
  Family out;
  const Mask t = search.terminals();
  for (Mask s = t;; s = (s - 1) & t) {
    if (std::popcount(s) % 2 == 0 && search.find(s)) out.push_back(search.graph().set_of(s));
    if (s == 0) break;
  }
  return canonical(std::move(out));
}

PathPacking max_mader_packing(const MaderNetwork& net, std::size_t max_vertices) {
  PackingSearch search(net, max_vertices);
  for (Mask s : submasks_by_size_desc(search.terminals())) {
    if (std::popcount(s) % 2 == 1) continue;
    if (auto p = search.find(s)) return *p;
  }
  return PathPacking{};
}

std::size_t packing_number(const MaderNetwork& net, std::size_t max_vertices) {
  return max_mader_packing(net, max_vertices).size();
}

std::size_t deficiency(const MaderNetwork& net, const LabelSet& s, std::size_t max_vertices) {
  const LabelSet t = net.terminals();
  for (const auto& v : s) {
    if (t.count(v) == 0) throw NetworkError("deficiency set contains a non-terminal: " + v);
  }
  return s.size() - 2 * packing_number(net.restricted_to(s), max_vertices);
}

LabelSet min_vertex_multiway_cut_set(const MaderNetwork& net, std::size_t max_vertices) {
  net.validate();
  const Indexed g(net.graph, max_vertices, "multiway cut oracle");
  std::vector<int> block(g.labels.size(), -1);
  for (const auto& [t, b] : net.block_of()) block[g.index.at(t)] = static_cast<int>(b);
  const std::size_t n = g.labels.size();
  for (std::size_t c = 0; c <= n; ++c) {
    for (const auto& comb : combinations(n, c)) {
      Mask removed = 0;
      for (auto i : comb) removed |= bit(static_cast<int>(i));
      if (separates(g, block, removed)) return g.set_of(removed);
    }
  }
  return g.set_of(static_cast<Mask>((std::uint64_t{1} << n) - 1));
}

std::size_t min_vertex_multiway_cut(const MaderNetwork& net, std::size_t max_vertices) {
  return min_vertex_multiway_cut_set(net, max_vertices).size();
}

std::size_t max_vertex_disjoint_paths(const Graph& g, const LabelSet& a, const LabelSet& b) {
  const auto labels = g.vertices();
  std::map<Label, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
  const int n = static_cast<int>(labels.size());
  // Node 2v is v_in, 2v+1 is v_out; source 2n, sink 2n+1.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  std::vector<std::map<int, int>> cap(2 * n + 2);
  auto add = [&](int u, int v, int c) {
    cap[u][v] += c;
    cap[v].emplace(u, 0);
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    add(2 * index[u] + 1, 2 * index[v], 1);
    add(2 * index[v] + 1, 2 * index[u], 1);
  }
  for (const auto& v : a) {
    if (!index.count(v)) throw UnknownLabelError("unknown vertex: " + v);
    add(source, 2 * index[v], 1);
  }
  for (const auto& v : b) {
    if (!index.count(v)) throw UnknownLabelError("unknown vertex: " + v);
    add(2 * index[v] + 1, sink, 1);
  }
  std::size_t flow = 0;
  for (;;) {
    std::vector<int> parent(2 * n + 2, -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, c] : cap[u]) {
        if (c > 0 && parent[v] < 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int v = sink; v != source; v = parent[v]) {
      cap[parent[v]][v] -= 1;
      cap[v][parent[v]] += 1;
    }
    ++flow;
  }
  return flow;
}

MimicResult check_mimicking(const MaderNetwork& a, const MaderNetwork& b, std::size_t max_vertices) {
  const Family pa(a.partition.begin(), a.partition.end());
  const Family pb(b.partition.begin(), b.partition.end());
  if (canonical(pa) != canonical(pb)) throw NetworkError("networks have different terminal partitions");
  PackingSearch sa(a, max_vertices);
  PackingSearch sb(b, max_vertices);
  MimicResult out;
  const LabelSet terminals = a.terminals();
  const std::vector<Label> t(terminals.begin(), terminals.end());
  const std::uint64_t total = std::uint64_t{1} << t.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    LabelSet s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (m >> i & 1) s.insert(t[i]);
    }
    const bool in_a = sa.find(sa.graph().mask_of(s)).has_value();
    const bool in_b = sb.find(sb.graph().mask_of(s)).has_value();
    if (in_a != in_b) {
      out.ok = false;
      out.witness = s;
      out.matchable_in_a = in_a;
      out.matchable_in_b = in_b;
      return out;
    }
  }
  return out;
}

FieldElement pfaffian_by_matchings(const SkewMatrix& a, std::size_t max_size) {
  if (a.size() > max_size) throw OracleSizeError("pfaffian oracle: matrix too large");
  if (a.size() % 2 == 1) return a.ctx().zero();
  const Mask all = static_cast<Mask>((std::uint64_t{1} << a.size()) - 1);
  return a.ctx().element(pf_rec(a, a.ctx(), all));
}

FieldElement determinant_by_permutations(const SkewMatrix& a, std::size_t max_size) {
  if (a.size() > max_size) throw OracleSizeError("determinant oracle: matrix too large");
  const FieldCtx& f = a.ctx();
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t sum = 0;
  do {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < perm.size() && prod != 0; ++i) prod = f.mul_raw(prod, a.raw(i, perm[i]));
    sum ^= prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f.element(sum);
}

RepsetInstance gen_lb_repairs(std::size_t k, std::size_t q, const FieldCtx& ctx, Rng& rng) {
  if (q < 1 || k < q) throw std::invalid_argument("lb-repairs needs k >= q >= 1");
  const auto t = numbered("t", k);
  const auto u = numbered("u", k);
  Graph g;
  for (std::size_t i = 0; i < k; ++i) {
    g.add_vertex(t[i]);
    g.add_vertex(u[i]);
    g.add_edge(t[i], u[i]);
  }
  QSetFamily fam;
  fam.q = q;
  fam.sets = subsets_of_size(u, q);
  DeltaMatroid dm = matching_delta_matroid(g, ctx, rng);
  return RepsetInstance{std::move(g), std::move(dm), LabelSet(t.begin(), t.end()), std::move(fam)};
}

RepsetInstance gen_lb_extends(std::size_t k, std::size_t q, const FieldCtx& ctx, Rng& rng) {
  if (q < 1 || k < q) throw std::invalid_argument("lb-extends needs k >= q >= 1");
  if (k % 2 == 1 || q % 2 == 1) throw std::invalid_argument("lb-extends needs k and q even");
  const auto v = numbered("v", k);
  const auto u = numbered("u", k);
  const auto w = numbered("w", k);
  Graph g;
  for (std::size_t i = 0; i < k; ++i) {
    g.add_vertex(v[i]);
    g.add_vertex(u[i]);
    g.add_vertex(w[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) g.add_edge(v[i], v[j]);
    g.add_edge(v[i], u[i]);
    g.add_edge(v[i], w[i]);
  }
  LabelSet pivot_set(v.begin(), v.end());
  pivot_set.insert(w.begin(), w.end());
  LabelSet keep(u.begin(), u.end());
  keep.insert(w.begin(), w.end());
  for (int attempt = 0; attempt < 16; ++attempt) {
    const DeltaMatroid tutte = matching_delta_matroid(g, ctx, rng);
    if (!is_feasible(tutte, pivot_set)) continue;
    DeltaMatroid dm(tutte.matrix().pivot(pivot_set).principal_submatrix(keep));
    QSetFamily fam;
    fam.q = q;
    fam.sets = subsets_of_size(u, q);
    return RepsetInstance{std::move(g), std::move(dm), LabelSet(w.begin(), w.end()), std::move(fam)};
  }
  throw std::runtime_error("lb-extends: pivot block singular in every draw");
}

MaderNetwork k4_pendants() {
  MaderNetwork net;
  for (const char* x : {"a", "b", "c", "d", "ta1", "ta2", "ta3", "tb", "tc", "td"}) net.graph.add_vertex(x);
  const char* core[] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) net.graph.add_edge(core[i], core[j]);
  }
  for (const char* t : {"ta1", "ta2", "ta3"}) net.graph.add_edge("a", t);
  net.graph.add_edge("b", "tb");
  net.graph.add_edge("c", "tc");
  net.graph.add_edge("d", "td");
  net.partition = {{"ta1", "ta2", "ta3"}, {"tb"}, {"tc"}, {"td"}};
  return net;
}

MaderNetwork random_network(std::size_t n, std::size_t k, std::size_t blocks, double p, Rng& rng) {
  if (k > n) throw std::invalid_argument("more terminals than vertices");
  if (k > 0 && (blocks < 1 || blocks > k)) throw std::invalid_argument("block count must lie in [1, k]");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("t" + std::to_string(i));
  for (std::size_t i = k; i < n; ++i) labels.push_back("v" + std::to_string(i));
  MaderNetwork net;
  net.graph = Graph(labels);
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) net.graph.add_edge(labels[i], labels[j]);
    }
  }
  if (k > 0) {
    net.partition.assign(blocks, LabelSet{});
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    for (std::size_t i = 0; i < k; ++i) net.partition[i < blocks ? i : pick(rng)].insert(labels[i]);
  }
  return net;
}

std::vector<std::vector<LabelSet>> set_partitions(const LabelSet& s) {
  std::vector<std::vector<LabelSet>> out;
  std::vector<LabelSet> cur;
  partitions_rec(std::vector<Label>(s.begin(), s.end()), 0, cur, out);
  return out;
}

Family subsets_of_size(const std::vector<Label>& s, std::size_t q) {
  Family out;
  for (const auto& c : combinations(s.size(), q)) {
    LabelSet x;
    for (auto i : c) x.insert(s[i]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace dmkit
