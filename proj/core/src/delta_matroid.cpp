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

#include "dmkit/delta_matroid.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dense.hpp"

namespace dmkit {
namespace {

void require_subset(const DeltaMatroid& d, const LabelSet& s) {
  for (const auto& v : s) {
    if (!d.matrix().contains(v)) throw UnknownLabelError("unknown ground element: " + v);
  }
}

void require_normal(const DeltaMatroid& d, const char* what) {
  if (!d.is_normal()) throw DeltaMatroidError(std::string(what) + " needs a delta-matroid without twist");
}

}  // namespace

DeltaMatroid::DeltaMatroid(SkewMatrix matrix, LabelSet twist)
    : matrix_(std::move(matrix)), twist_(std::move(twist)) {
  require_subset(*this, twist_);
}

bool is_feasible(const DeltaMatroid& d, const LabelSet& f) {
  require_subset(d, f);
  const LabelSet x = symmetric_difference(f, d.twist());
  if (x.size() % 2 == 1) return false;
  return d.matrix().principal_submatrix(x).is_nonsingular();
}

DeltaMatroid twist(const DeltaMatroid& d, const LabelSet& s) {
  require_subset(d, s);
  return DeltaMatroid(d.matrix(), symmetric_difference(d.twist(), s));
}

DeltaMatroid twist_by_pivot(const DeltaMatroid& d, const LabelSet& s) {
  require_normal(d, "twist_by_pivot");
  require_subset(d, s);
  if (!is_feasible(d, s)) throw DeltaMatroidError("pivot set " + to_string(s) + " is not feasible");
  return DeltaMatroid(d.matrix().pivot(s));
}

DeltaMatroid delete_elements(const DeltaMatroid& d, const LabelSet& s) {
  require_subset(d, s);
  const SkewMatrix& a = d.matrix();
  const LabelSet rest = set_minus(a.label_set(), s);
  const LabelSet twisted = set_intersection(s, d.twist());
  if (twisted.empty()) return DeltaMatroid(a.principal_submatrix(rest), d.twist());

  // Pivot by a nonsingular block containing the twisted part of S; the
  // smallest choice is that part itself.
  LabelSet block = twisted;
  if (!a.principal_submatrix(twisted).is_nonsingular()) {
    const SkewMatrix w = a.principal_submatrix(set_union(twisted, rest));
    const auto basis = w.column_basis(std::vector<Label>(twisted.begin(), twisted.end()));
    block = LabelSet(basis.begin(), basis.end());
    if (!is_subset(twisted, block)) {
      throw DeltaMatroidError("deleting " + to_string(s) + " leaves no feasible set");
    }
  }
  return DeltaMatroid(a.pivot(block).principal_submatrix(rest),
                      symmetric_difference(d.twist(), block));
}

DeltaMatroid contract(const DeltaMatroid& d, const LabelSet& s) {
  require_subset(d, s);
  if (!is_feasible(d, s)) throw DeltaMatroidError("contraction set " + to_string(s) + " is not feasible");
  return delete_elements(twist(d, s), s);
}

std::size_t rank_of(const DeltaMatroid& d, const LabelSet& t) {
  require_normal(d, "rank_of");
  require_subset(d, t);
  return d.matrix().column_rank(t);
}

LabelSet minimal_feasible_spanning(const DeltaMatroid& d, const LabelSet& t) {
  require_normal(d, "minimal_feasible_spanning");
  require_subset(d, t);
  const SkewMatrix& a = d.matrix();
  const auto basis = a.column_basis(std::vector<Label>(t.begin(), t.end()));
  LabelSet b(basis.begin(), basis.end());

  // B minus {u, v} is feasible iff (A*B)[u, v] != 0, and pivoting A*B by
  // {u, v} gives A*(B minus {u, v}).
  SkewMatrix p = a.pivot(b);
  for (;;) {
    const LabelSet outside = set_minus(b, t);
    const std::vector<Label> loose(outside.begin(), outside.end());
    bool removed = false;
    for (std::size_t i = 0; i < loose.size() && !removed; ++i) {
      const std::size_t pi = p.index_of(loose[i]);
      for (std::size_t j = i + 1; j < loose.size(); ++j) {
        if (p.raw(pi, p.index_of(loose[j])) == 0) continue;
        const LabelSet pair{loose[i], loose[j]};
        p = p.pivot(pair);
        b = set_minus(b, pair);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  return b;
}

Family enumerate_feasible(const DeltaMatroid& d, std::size_t max_ground) {
  const auto& labels = d.matrix().labels();
  const std::size_t n = labels.size();
  if (n > max_ground) {
    throw GuardError("enumerate_feasible: ground set of " + std::to_string(n) +
                     " elements exceeds the limit of " + std::to_string(max_ground));
  }
  if (n > 62) throw GuardError("enumerate_feasible: ground set too large");
  const SkewMatrix& a = d.matrix();
  const FieldCtx& f = a.ctx();
  std::uint64_t tw = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.twist().count(labels[i]) != 0) tw |= std::uint64_t{1} << i;
  }
  Family out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint64_t x = mask ^ tw;
    const int k = std::popcount(x);
    if (k % 2 == 1) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (x >> i & 1) idx.push_back(i);
    }
    dense::Mat m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a.raw(idx[i], idx[j]);
    }
    if (dense::pfaffian(f, std::move(m)) == 0) continue;
    LabelSet fset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) fset.insert(labels[i]);
    }
    out.push_back(std::move(fset));
  }
  return canonical(std::move(out));
}

bool check_exchange_axiom(const Family& family) {
  std::map<Label, int> bit;
  for (const auto& s : family) {
    for (const auto& v : s) bit.emplace(v, 0);
  }
  if (bit.size() > 64) throw GuardError("check_exchange_axiom: more than 64 elements");
  int next = 0;
  for (auto& [_, b] : bit) b = next++;
  std::vector<std::uint64_t> masks;
  for (const auto& s : family) {
    std::uint64_t m = 0;
    for (const auto& v : s) m |= std::uint64_t{1} << bit[v];
    masks.push_back(m);
  }
  const std::unordered_set<std::uint64_t> members(masks.begin(), masks.end());
  for (auto a : masks) {
    for (auto b : masks) {
      const std::uint64_t diff = a ^ b;
      for (std::uint64_t xs = diff; xs != 0; xs &= xs - 1) {
        const std::uint64_t x = xs & (~xs + 1);
        bool ok = false;
        for (std::uint64_t ys = diff; ys != 0 && !ok; ys &= ys - 1) {
          const std::uint64_t y = ys & (~ys + 1);
          ok = members.count(a ^ x ^ (x == y ? 0 : y)) != 0;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace dmkit
