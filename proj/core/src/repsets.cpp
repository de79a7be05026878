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

#include "dmkit/repsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "dense.hpp"

namespace dmkit {
namespace {

__extension__ using u128 = unsigned __int128;

void emit(const FieldCtx& ctx, const std::vector<std::uint64_t>& x, std::size_t start,
          std::size_t left, std::uint64_t prod, bool homogeneous, std::vector<std::uint64_t>& out) {
  if (!homogeneous || left == 0) out.push_back(prod);
  if (left == 0) return;
  for (std::size_t j = start; j < x.size(); ++j) {
    emit(ctx, x, j, left - 1, prod == 0 ? 0 : ctx.mul_raw(prod, x[j]), homogeneous, out);
  }
}

std::vector<std::size_t> processing_order(std::size_t n, const std::vector<double>& weights) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!weights.empty()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
  }
  return order;
}

void require_elements(const DeltaMatroid& d, const QSetFamily& fam, const LabelSet& t) {
  for (const auto& v : t) {
    if (!d.matrix().contains(v)) throw UnknownLabelError("unknown terminal: " + v);
  }
  for (const auto& y : fam.sets) {
    for (const auto& v : y) {
      if (!d.matrix().contains(v)) throw UnknownLabelError("unknown family element: " + v);
    }
  }
}

// z_{x,i} = A[x, y_i] for x in rows, then z'_{i,j} = A[y_i, y_j] for i < j.
std::vector<FieldElement> pair_vector(const SkewMatrix& a, const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& ys) {
  std::vector<FieldElement> v;
  v.reserve(rows.size() * ys.size() + ys.size() * (ys.size() - (ys.empty() ? 0 : 1)) / 2);
  for (auto x : rows) {
    for (auto y : ys) v.push_back(a.at(x, y));
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) v.push_back(a.at(ys[i], ys[j]));
  }
  return v;
}

RepresentativeSet finish(const SieveInstance& inst, const QSetFamily& fam, std::uint64_t bound,
                         std::uint64_t max_monomials) {
  auto kept = representative_basis(inst, max_monomials);
  std::sort(kept.begin(), kept.end());
  RepresentativeSet out;
  out.retained = fam.subset(kept);
  out.indices = std::move(kept);
  out.bound = bound;
  out.arity = inst.arity;
  out.degree = inst.degree;
  return out;
}

SieveInstance make_instance(const FieldCtx& ctx, std::size_t arity, std::size_t degree,
                            bool homogeneous, const QSetFamily& fam) {
  SieveInstance inst{ctx, 0, 0, false, {}, {}, {}};
  inst.arity = arity;
  inst.degree = degree;
  inst.homogeneous = homogeneous;
  inst.weights = fam.weights;
  for (const auto& y : fam.sets) inst.items.push_back(to_string(y));
  return inst;
}

Label duplicate_label(const Label& v) { return v + "\x1f" "dup"; }

}  // namespace

std::uint64_t monomial_count(std::uint64_t r, std::uint64_t d) {
  u128 c = 1;
  for (std::uint64_t i = 1; i <= d; ++i) {
    c = c * (u128{r} + i) / i;
    if (c >> 64 != 0) {
      throw MonomialBoundError("monomial count binom(" + std::to_string(r) + "+" + std::to_string(d) +
                               ", " + std::to_string(d) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t homogeneous_monomial_count(std::uint64_t r, std::uint64_t d) {
  if (d == 0) return 1;
  if (r == 0) return 0;
  return monomial_count(r - 1, d);
}

void SieveInstance::validate() const {
  if (vectors.size() != items.size()) throw std::invalid_argument("one vector per item required");
  if (!weights.empty() && weights.size() != items.size()) {
    throw std::invalid_argument("one weight per item required");
  }
  for (const auto& v : vectors) {
    if (v.size() != arity) throw std::invalid_argument("vector arity mismatch");
    for (const auto& x : v) {
      if (x.bits() != ctx.bits()) throw std::invalid_argument("vector entry from a different field");
    }
  }
}

std::uint64_t SieveInstance::monomials() const {
  return homogeneous ? homogeneous_monomial_count(arity, degree) : monomial_count(arity, degree);
}

std::vector<std::uint64_t> monomial_vector(const FieldCtx& ctx, const std::vector<std::uint64_t>& x,
                                           std::size_t degree, bool homogeneous) {
  std::vector<std::uint64_t> out;
  emit(ctx, x, 0, degree, 1, homogeneous, out);
  return out;
}

std::vector<std::size_t> representative_basis(const SieveInstance& inst, std::uint64_t max_monomials) {
  inst.validate();
  const std::uint64_t dim = inst.monomials();
  if (dim > max_monomials) {
    throw MonomialBoundError("sieve needs " + std::to_string(dim) + " monomials, limit is " +
                             std::to_string(max_monomials));
  }
  dense::IncrementalBasis basis(inst.ctx, dim);
  std::vector<std::size_t> kept;
  for (auto i : processing_order(inst.items.size(), inst.weights)) {
    if (basis.size() == dim) break;
    std::vector<std::uint64_t> x;
    x.reserve(inst.arity);
    for (const auto& e : inst.vectors[i]) x.push_back(e.value());
    if (basis.add(monomial_vector(inst.ctx, x, inst.degree, inst.homogeneous))) kept.push_back(i);
  }
  return kept;
}

SieveInstance sieve_intersect(const SieveInstance& a, const SieveInstance& b) {
  if (a.items != b.items) throw std::invalid_argument("sieve instances have different items");
  if (a.ctx != b.ctx) throw std::invalid_argument("sieve instances over different fields");
  SieveInstance out = a;
  out.arity = a.arity + b.arity;
  out.degree = a.degree + b.degree;
  out.homogeneous = a.homogeneous && b.homogeneous;
  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    out.vectors[i].insert(out.vectors[i].end(), b.vectors[i].begin(), b.vectors[i].end());
  }
  return out;
}

SieveInstance sieve_union(const SieveInstance& a, const SieveInstance& b) {
  if (a.items != b.items) throw std::invalid_argument("sieve instances have different items");
  if (a.ctx != b.ctx) throw std::invalid_argument("sieve instances over different fields");
  SieveInstance out = a;
  out.arity = a.arity + b.arity;
  out.degree = std::max(a.degree, b.degree);
  out.homogeneous = a.homogeneous && b.homogeneous && a.degree == b.degree;
  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    out.vectors[i].insert(out.vectors[i].end(), b.vectors[i].begin(), b.vectors[i].end());
  }
  return out;
}

void QSetFamily::validate() const {
  for (const auto& s : sets) {
    if (s.size() != q) {
      throw std::invalid_argument("set " + to_string(s) + " does not have " + std::to_string(q) +
                                  " elements");
    }
  }
  if (!weights.empty() && weights.size() != sets.size()) {
    throw std::invalid_argument("one weight per set required");
  }
}

QSetFamily QSetFamily::subset(const std::vector<std::size_t>& indices) const {
  QSetFamily out;
  out.q = q;
  for (auto i : indices) {
    out.sets.push_back(sets.at(i));
    if (!weights.empty()) out.weights.push_back(weights.at(i));
  }
  return out;
}

RepresentativeSet matroid_representative_set(const LinearMatrix& m, const QSetFamily& fam,
                                             std::uint64_t max_monomials) {
  fam.validate();
  const std::size_t k = m.num_rows();
  if (m.rank() != k) throw std::invalid_argument("matrix does not have full row rank");
  if (fam.q > k) throw std::invalid_argument("q exceeds the matrix rank");
  std::map<Label, std::size_t> col;
  for (std::size_t j = 0; j < m.columns.size(); ++j) col.emplace(m.columns[j], j);

  // det(M_X | Y) is multilinear in the columns of Y, hence homogeneous.
  SieveInstance inst = make_instance(m.ctx, k * fam.q, fam.q, true, fam);
  for (const auto& y : fam.sets) {
    std::vector<FieldElement> v;
    for (const auto& e : y) {
      auto it = col.find(e);
      if (it == col.end()) throw UnknownLabelError("unknown column: " + e);
      for (std::size_t i = 0; i < k; ++i) v.push_back(m.rows[i][it->second]);
    }
    inst.vectors.push_back(std::move(v));
  }
  return finish(inst, fam, monomial_count(k * fam.q, fam.q), max_monomials);
}

RepresentativeSet dm_repset_cardinality(const DeltaMatroid& d, const LabelSet& t,
                                        const QSetFamily& fam, std::uint64_t max_monomials) {
  if (!d.is_normal()) throw DeltaMatroidError("representative sets need a delta-matroid without twist");
  fam.validate();
  require_elements(d, fam, t);
  const SkewMatrix& a = d.matrix();
  const std::size_t q = fam.q;
  const std::size_t arity = t.size() * q + q * (q - (q == 0 ? 0 : 1)) / 2;

  std::vector<std::size_t> rows;
  for (const auto& x : t) rows.push_back(a.index_of(x));
  SieveInstance inst = make_instance(a.ctx(), arity, q, false, fam);
  for (const auto& y : fam.sets) {
    std::vector<std::size_t> ys;
    for (const auto& e : y) ys.push_back(a.index_of(e));
    inst.vectors.push_back(pair_vector(a, rows, ys));
  }
  return finish(inst, fam, monomial_count(arity, q), max_monomials);
}

RepresentativeSet dm_repset_rank(const DeltaMatroid& d, const LabelSet& t, const QSetFamily& fam,
                                 std::uint64_t max_monomials) {
  if (!d.is_normal()) throw DeltaMatroidError("representative sets need a delta-matroid without twist");
  fam.validate();
  require_elements(d, fam, t);
  const SkewMatrix& a = d.matrix();
  const std::size_t n = a.size();
  const std::size_t q = fam.q;

  // Duplicate every element so that overlaps between X and Y show up as
  // repeated columns.
  std::vector<Label> labels = a.labels();
  for (const auto& v : a.labels()) {
    const Label dup = duplicate_label(v);
    if (a.contains(dup)) throw MatrixError("duplicate label collides with an element: " + v);
    labels.push_back(dup);
  }
  SkewMatrix doubled(a.ctx(), std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t x = a.raw(i, j);
      doubled.set_raw(i, j, x);
      doubled.set_raw(n + i, n + j, x);
      doubled.set_raw(i, n + j, x);
      doubled.set_raw(n + i, j, x);
    }
  }

  const std::size_t k = rank_of(d, t);
  const LabelSet b = minimal_feasible_spanning(d, t);
  const SkewMatrix pivoted = doubled.pivot(b);

  const std::size_t arity = b.size() * q + q * (q - (q == 0 ? 0 : 1)) / 2;
  std::vector<std::size_t> rows;
  for (const auto& x : b) rows.push_back(pivoted.index_of(x));
  SieveInstance inst = make_instance(a.ctx(), arity, q, false, fam);
  for (const auto& y : fam.sets) {
    std::vector<std::size_t> ys;
    for (const auto& e : y) ys.push_back(n + a.index_of(e));
    inst.vectors.push_back(pair_vector(pivoted, rows, ys));
  }
  return finish(inst, fam, monomial_count(2 * k * q + q * (q - (q == 0 ? 0 : 1)) / 2, q),
                max_monomials);
}

bool extends(const DeltaMatroid& d, const LabelSet& x, const LabelSet& y) {
  if (intersects(x, y)) return false;
  return is_feasible(d, set_union(x, y));
}

}  // namespace dmkit
