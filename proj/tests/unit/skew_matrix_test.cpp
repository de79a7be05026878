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

#include "dmkit/skew_matrix.hpp"

#include <gtest/gtest.h>

#include "dmkit/oracle.hpp"
#include "test_oracles.hpp"

namespace dmkit {
namespace {

using testing::all_subsets;
using testing::naive_nonsingular;
using testing::random_skew;

SkewMatrix two_by_two(const FieldCtx& f, std::uint64_t a) {
  SkewMatrix m(f, {"u", "v"});
  m.set("u", "v", f.element(a));
  return m;
}

TEST(SkewMatrix, ConstructionValidates) {
  const auto f = FieldCtx::make(8);
  EXPECT_THROW(SkewMatrix(f, {"a", "a"}), MatrixError);
  const auto one = f.one();
  const auto zero = f.zero();
  EXPECT_THROW(SkewMatrix::from_rows(f, {"a", "b"}, {{zero, one}, {zero, zero}}), MatrixError);
  EXPECT_THROW(SkewMatrix::from_rows(f, {"a", "b"}, {{one, one}, {one, zero}}), MatrixError);
  EXPECT_THROW(SkewMatrix::from_rows(f, {"a", "b"}, {{zero, one}}), MatrixError);
  const auto g = FieldCtx::make(16);
  EXPECT_THROW(SkewMatrix::from_rows(f, {"a", "b"}, {{zero, g.one()}, {g.one(), zero}}),
               MatrixError);
  const auto m = SkewMatrix::from_rows(f, {"a", "b"}, {{zero, one}, {one, zero}});
  EXPECT_EQ(m.at("a", "b"), one);
  EXPECT_THROW(m.at("a", "z"), UnknownLabelError);
}

TEST(SkewMatrix, SetKeepsSymmetry) {
  const auto f = FieldCtx::make(8);
  SkewMatrix m(f, {"a", "b", "c"});
  m.set("a", "c", f.element(7));
  EXPECT_EQ(m.at("c", "a").value(), 7u);
  EXPECT_THROW(m.set("a", "a", f.one()), MatrixError);
  EXPECT_NO_THROW(m.set("a", "a", f.zero()));
}

TEST(PrincipalSubmatrix, Basics) {
  const auto f = FieldCtx::make(16);
  Rng rng(1);
  const auto a = random_skew(f, 4, rng);
  const auto empty = a.principal_submatrix({});
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_TRUE(empty.is_nonsingular());
  EXPECT_EQ(a.principal_submatrix(a.label_set()), a);
  const auto top = a.principal_submatrix({"e0", "e1"});
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top.at(0, 1), a.at(0, 1));
  EXPECT_THROW(a.principal_submatrix({"zz"}), UnknownLabelError);
}

TEST(Rank, SmallCases) {
  const auto f = FieldCtx::make(16);
  for (std::size_t n = 1; n < 6; ++n) {
    SkewMatrix z(f, testing::numbered("z", n));
    EXPECT_EQ(z.rank(), 0u);
    EXPECT_FALSE(z.is_nonsingular());
  }
  const auto m = two_by_two(f, 0x1234);
  EXPECT_TRUE(m.is_nonsingular());
  EXPECT_EQ(m.rank(), 2u);
}

TEST(Rank, OddDimensionAlwaysSingular) {
  const auto f = FieldCtx::make(16);
  Rng rng(2);
  for (std::size_t n = 1; n <= 11; n += 2) {
    for (int i = 0; i < 20; ++i) {
      const auto a = random_skew(f, n, rng);
      EXPECT_FALSE(a.is_nonsingular());
      EXPECT_TRUE(a.determinant().is_zero());
      EXPECT_TRUE(a.pfaffian().is_zero());
    }
  }
}

TEST(Rank, AgreesWithNaiveRankAndIsEven) {
  const auto f = FieldCtx::make(8);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_skew(f, 1 + i % 9, rng, 0.6);
    const auto r = a.rank();
    EXPECT_EQ(r, testing::naive_rank(8, f.modulus_low(), testing::raw_block(a, a.label_set())));
    EXPECT_EQ(r % 2, 0u);
  }
}

TEST(Determinant, AgreesWithNaiveElimination) {
  const auto f = FieldCtx::make(16);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_skew(f, i % 9, rng, 0.3);
    EXPECT_EQ(a.determinant().value(),
              testing::naive_determinant(16, f.modulus_low(), testing::raw_block(a, a.label_set())));
  }
}

TEST(Pfaffian, TwoByTwo) {
  const auto f = FieldCtx::make(16);
  EXPECT_EQ(two_by_two(f, 0xBEEF).pfaffian().value(), 0xBEEFu);
  EXPECT_EQ(SkewMatrix(f, {}).pfaffian(), f.one());
}

TEST(Pfaffian, FourByFourMatchingExpansion) {
  const auto f = FieldCtx::make(16);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_skew(f, 4, rng);
    const auto want = a.at(0, 1) * a.at(2, 3) + a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
    EXPECT_EQ(a.pfaffian(), want);
  }
}

TEST(Pfaffian, AgreesWithMatchingSum) {
  const auto f = FieldCtx::make(16);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_skew(f, 2 * (i % 5), rng, 0.4);
    EXPECT_EQ(a.pfaffian(), pfaffian_by_matchings(a));
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  const auto f = FieldCtx::make(16);
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_skew(f, i % 13, rng, (i % 4) * 0.2);
    const auto pf = a.pfaffian();
    EXPECT_EQ(pf * pf, a.determinant());
  }
}

TEST(Pivot, EmptySetIsIdentity) {
  const auto f = FieldCtx::make(16);
  Rng rng(8);
  const auto a = random_skew(f, 5, rng);
  EXPECT_EQ(a.pivot({}), a);
}

TEST(Pivot, TwoByTwoInverts) {
  const auto f = FieldCtx::make(16);
  const auto a = two_by_two(f, 0x1D3);
  const auto p = a.pivot({"u", "v"});
  EXPECT_EQ(p.at("u", "v"), inv(f.element(0x1D3)));
  EXPECT_TRUE(p.at("u", "u").is_zero());
}

TEST(Pivot, SingularBlockThrows) {
  const auto f = FieldCtx::make(16);
  SkewMatrix a(f, {"a", "b", "c"});
  a.set("a", "c", f.one());
  EXPECT_THROW(a.pivot({"a", "b"}), SingularPivotError);
  EXPECT_THROW(a.pivot({"a"}), SingularPivotError);
}

TEST(Pivot, FeasibilityTracksSymmetricDifference) {
  const auto f = FieldCtx::make(16);
  Rng rng(9);
  int checked = 0;
  while (checked < 30) {
    const auto a = random_skew(f, 6, rng, 0.3);
    const auto subsets = all_subsets(a.label_set());
    const auto& s = subsets[rng() % subsets.size()];
    if (!naive_nonsingular(a, s)) continue;
    const auto p = a.pivot(s);
    for (const auto& x : subsets) {
      ASSERT_EQ(p.principal_submatrix(x).is_nonsingular(),
                naive_nonsingular(a, symmetric_difference(x, s)));
    }
    ++checked;
  }
}

TEST(Pivot, IsAnInvolution) {
  const auto f = FieldCtx::make(32);
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_skew(f, 6, rng);
    const LabelSet s{"e1", "e4"};
    if (!a.principal_submatrix(s).is_nonsingular()) continue;
    EXPECT_EQ(a.pivot(s).pivot(s), a);
  }
}

TEST(Pivot, ZeroBlockOutsideBasis) {
  const auto f = FieldCtx::make(16);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_skew(f, 2 + i % 7, rng, 0.5);
    const auto basis = a.column_basis();
    const LabelSet b(basis.begin(), basis.end());
    EXPECT_EQ(b.size(), a.rank());
    const auto p = a.pivot(b);
    for (const auto& u : a.labels()) {
      for (const auto& v : a.labels()) {
        if (b.count(u) == 0 && b.count(v) == 0) ASSERT_TRUE(p.at(u, v).is_zero());
      }
    }
  }
}

TEST(SupportGraph, Basics) {
  const auto f = FieldCtx::make(16);
  EXPECT_EQ(SkewMatrix(f, {"a", "b", "c"}).support_graph().num_edges(), 0u);
  const auto g = two_by_two(f, 3).support_graph();
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge("u", "v"));

  Graph c4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  Rng rng(12);
  SkewMatrix t(f, {"a", "b", "c", "d"});
  for (const auto& [u, v] : c4.edges()) t.set(u, v, f.random_nonzero(rng));
  EXPECT_EQ(t.support_graph(), c4);
}

TEST(ColumnBasis, PrefersGivenOrder) {
  const auto f = FieldCtx::make(16);
  Rng rng(13);
  const auto a = random_skew(f, 4, rng);
  ASSERT_TRUE(a.is_nonsingular());
  const auto b = a.column_basis({"e3", "e2"});
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], "e3");
  EXPECT_EQ(b[1], "e2");
  EXPECT_EQ(a.column_rank({"e0", "e1"}), 2u);
}

}  // namespace
}  // namespace dmkit
