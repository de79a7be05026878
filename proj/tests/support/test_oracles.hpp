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

// Slow, obviously-correct reference computations used only by tests. None of
// them call into the library's arithmetic or linear algebra.

#ifndef DMKIT_TESTS_TEST_ORACLES_HPP_
#define DMKIT_TESTS_TEST_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dmkit/graph.hpp"
#include "dmkit/skew_matrix.hpp"
#include "dmkit/types.hpp"

namespace dmkit::testing {

// Shift-and-add multiply with reduction after every shift.
inline std::uint64_t schoolbook_mul(unsigned bits, std::uint64_t low, std::uint64_t a,
                                    std::uint64_t b) {
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  std::uint64_t r = 0;
  for (unsigned i = 0; i < bits; ++i) {
    if ((b >> i) & 1) r ^= a;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

inline std::uint64_t schoolbook_pow(unsigned bits, std::uint64_t low, std::uint64_t a,
                                    std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = schoolbook_mul(bits, low, r, a);
    a = schoolbook_mul(bits, low, a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t schoolbook_inv(unsigned bits, std::uint64_t low, std::uint64_t a) {
  const std::uint64_t order_minus_two =
      bits == 64 ? ~std::uint64_t{0} - 1 : (std::uint64_t{1} << bits) - 2;
  return schoolbook_pow(bits, low, a, order_minus_two);
}

// Remainder of a polynomial (as bit vector, degree < 128) modulo d != 0.
inline std::uint64_t poly_mod(unsigned __int128 a, std::uint64_t d) {
  const int dd = 63 - __builtin_clzll(d);
  for (int i = 127; i >= dd; --i) {
    if ((a >> i) & 1) a ^= static_cast<unsigned __int128>(d) << (i - dd);
  }
  return static_cast<std::uint64_t>(a);
}

// Irreducibility by trial division over every polynomial of degree
// 1..bits/2. Practical for bits <= 32.
inline bool trial_division_irreducible(unsigned bits, std::uint64_t low) {
  const unsigned __int128 f = (static_cast<unsigned __int128>(1) << bits) | low;
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (bits / 2 + 1)); ++d) {
    if (poly_mod(f, d) == 0) return false;
  }
  return true;
}

// Gaussian elimination with schoolbook arithmetic on raw values.
inline std::uint64_t naive_determinant(unsigned bits, std::uint64_t low,
                                       std::vector<std::vector<std::uint64_t>> m) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    std::swap(m[p], m[c]);
    det = schoolbook_mul(bits, low, det, m[c][c]);
    const std::uint64_t iv = schoolbook_inv(bits, low, m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = schoolbook_mul(bits, low, m[r][c], iv);
      for (std::size_t j = c; j < n; ++j) m[r][j] ^= schoolbook_mul(bits, low, f, m[c][j]);
    }
  }
  return det;
}

inline std::size_t naive_rank(unsigned bits, std::uint64_t low,
                              std::vector<std::vector<std::uint64_t>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const std::uint64_t iv = schoolbook_inv(bits, low, m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = schoolbook_mul(bits, low, m[i][c], iv);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= schoolbook_mul(bits, low, f, m[r][j]);
    }
    ++r;
  }
  return r;
}

// Raw principal submatrix of `a` on the labels in `s`.
inline std::vector<std::vector<std::uint64_t>> raw_block(const SkewMatrix& a, const LabelSet& s) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s.count(a.labels()[i]) != 0) idx.push_back(i);
  }
  std::vector<std::vector<std::uint64_t>> out(idx.size(), std::vector<std::uint64_t>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = a.raw(idx[i], idx[j]);
  }
  return out;
}

inline bool naive_nonsingular(const SkewMatrix& a, const LabelSet& s) {
  return naive_determinant(a.ctx().bits(), a.ctx().modulus_low(), raw_block(a, s)) != 0;
}

// Perfect matching by pairing the lowest vertex with each neighbour.
inline bool naive_perfect_matching(const Graph& g, LabelSet left) {
  if (left.empty()) return true;
  const Label v = *left.begin();
  left.erase(left.begin());
  for (const auto& w : g.neighbors(v)) {
    if (left.count(w) == 0) continue;
    LabelSet rest = left;
    rest.erase(w);
    if (naive_perfect_matching(g, rest)) return true;
  }
  return false;
}

inline std::vector<LabelSet> all_subsets(const LabelSet& s) {
  const std::vector<Label> v(s.begin(), s.end());
  std::vector<LabelSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
    LabelSet x;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if ((m >> i) & 1) x.insert(v[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline Family naive_matching_family(const Graph& g) {
  Family out;
  for (const auto& s : all_subsets(g.vertex_set())) {
    if (naive_perfect_matching(g, s)) out.push_back(s);
  }
  return canonical(std::move(out));
}

// Labels x0, x1, ... .
inline std::vector<Label> numbered(const std::string& prefix, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Uniform random skew matrix; each off-diagonal pair is zero with
// probability `zero_prob`.
inline SkewMatrix random_skew(const FieldCtx& ctx, std::size_t n, std::mt19937_64& rng,
                              double zero_prob = 0.0) {
  SkewMatrix a(ctx, numbered("e", n));
  std::bernoulli_distribution zero(zero_prob);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!zero(rng)) a.set_raw(i, j, ctx.random(rng).value());
    }
  }
  return a;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng,
                          const std::string& prefix = "v") {
  const auto labels = numbered(prefix, n);
  Graph g(labels);
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) g.add_edge(labels[i], labels[j]);
    }
  }
  return g;
}

}  // namespace dmkit::testing

#endif  // DMKIT_TESTS_TEST_ORACLES_HPP_
