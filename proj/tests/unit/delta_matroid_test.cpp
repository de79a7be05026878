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

#include <gtest/gtest.h>

#include <algorithm>

#include "dmkit/constructions.hpp"
#include "test_oracles.hpp"

namespace dmkit {
namespace {

using testing::all_subsets;

const FieldCtx kF = FieldCtx::make(64);

DeltaMatroid matching_dm(const Graph& g, std::uint64_t seed = 1) {
  Rng rng(seed);
  return matching_delta_matroid(g, kF, rng);
}

Graph path_abc() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
Graph edge_uv() { return Graph({"u", "v"}, {{"u", "v"}}); }
Graph two_edges() { return Graph({"t1", "u1", "t2", "u2"}, {{"t1", "u1"}, {"t2", "u2"}}); }

// Brute-force feasible family of a possibly twisted delta-matroid.
Family brute_family(const DeltaMatroid& d) {
  Family out;
  for (const auto& f : all_subsets(d.ground())) {
    if (testing::naive_nonsingular(d.matrix(), symmetric_difference(f, d.twist()))) out.push_back(f);
  }
  return canonical(std::move(out));
}

std::size_t brute_rank(const Family& fam, const LabelSet& t) {
  std::size_t best = 0;
  for (const auto& f : fam) best = std::max(best, set_intersection(f, t).size());
  return best;
}

TEST(IsFeasible, Basics) {
  const auto d = matching_dm(edge_uv());
  EXPECT_TRUE(is_feasible(d, {}));
  EXPECT_TRUE(is_feasible(d, {"u", "v"}));
  EXPECT_FALSE(is_feasible(d, {"u"}));
  EXPECT_THROW(is_feasible(d, {"x"}), UnknownLabelError);
}

TEST(IsFeasible, OddSetsInfeasibleInNormal) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::random_graph(7, 0.5, rng);
    const auto d = matching_dm(g, i);
    for (const auto& f : all_subsets(d.ground())) {
      if (f.size() % 2 == 1) ASSERT_FALSE(is_feasible(d, f));
    }
  }
}

TEST(Twist, Basics) {
  Rng rng(3);
  const auto g = testing::random_graph(6, 0.5, rng);
  const auto d = matching_dm(g);
  EXPECT_EQ(enumerate_feasible(twist(d, {})), enumerate_feasible(d));
  const LabelSet s{"v0", "v3", "v4"};
  EXPECT_EQ(enumerate_feasible(twist(twist(d, s), s)), enumerate_feasible(d));

  const auto e = matching_dm(edge_uv());
  const Family want{{}, {"u", "v"}};
  EXPECT_EQ(enumerate_feasible(twist(e, {"u", "v"})), want);
  EXPECT_THROW(twist(e, {"q"}), UnknownLabelError);
}

TEST(Twist, FamilyIsShiftedBySymmetricDifference) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::random_graph(6, 0.5, rng);
    const auto d = matching_dm(g, i);
    const auto subsets = all_subsets(d.ground());
    const auto& s = subsets[rng() % subsets.size()];
    Family shifted;
    for (const auto& f : enumerate_feasible(d)) shifted.push_back(symmetric_difference(f, s));
    EXPECT_EQ(enumerate_feasible(twist(d, s)), canonical(shifted));
  }
}

TEST(TwistByPivot, NormalRepresentationOfTwist) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::random_graph(6, 0.6, rng);
    const auto d = matching_dm(g, i);
    const auto fam = enumerate_feasible(d);
    const auto& s = fam[rng() % fam.size()];
    const auto p = twist_by_pivot(d, s);
    EXPECT_TRUE(p.is_normal());
    EXPECT_EQ(enumerate_feasible(p), enumerate_feasible(twist(d, s)));
  }
  const auto e = matching_dm(edge_uv());
  EXPECT_THROW(twist_by_pivot(e, {"u"}), DeltaMatroidError);
}

TEST(Delete, Basics) {
  const auto d = matching_dm(path_abc());
  EXPECT_EQ(enumerate_feasible(delete_elements(d, {})), enumerate_feasible(d));
  const auto bc = delete_elements(d, {"a"});
  EXPECT_EQ(bc.ground(), (LabelSet{"b", "c"}));
  EXPECT_EQ(enumerate_feasible(bc), testing::naive_matching_family(Graph({"b", "c"}, {{"b", "c"}})));
}

TEST(Delete, KeepsSetsAvoidingDeleted) {
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(7, 0.5, rng);
    auto d = matching_dm(g, i);
    const auto fam0 = enumerate_feasible(d);
    // Also exercise a twisted input.
    if (i % 2 == 1) d = twist(d, fam0[rng() % fam0.size()]);
    const auto fam = brute_family(d);
    const LabelSet s{"v1", "v5"};
    Family want;
    for (const auto& f : fam) {
      if (!intersects(f, s)) want.push_back(f);
    }
    if (want.empty()) continue;
    EXPECT_EQ(brute_family(delete_elements(d, s)), canonical(want)) << i;
  }
}

TEST(Contract, Basics) {
  const auto d = matching_dm(path_abc());
  const auto a = contract(d, {"b", "c"});
  EXPECT_EQ(a.ground(), LabelSet{"a"});
  EXPECT_EQ(enumerate_feasible(a), Family{LabelSet{}});
  EXPECT_THROW(contract(d, {"a"}), DeltaMatroidError);
}

TEST(Contract, KeepsSetsContainingContracted) {
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(7, 0.5, rng);
    const auto d = matching_dm(g, i);
    const auto fam = enumerate_feasible(d);
    const auto& s = fam[rng() % fam.size()];
    Family want;
    for (const auto& f : fam) {
      if (is_subset(s, f)) want.push_back(set_minus(f, s));
    }
    EXPECT_EQ(brute_family(contract(d, s)), canonical(want));
  }
}

TEST(RankOf, Examples) {
  EXPECT_EQ(rank_of(matching_dm(path_abc()), {}), 0u);
  EXPECT_EQ(rank_of(matching_dm(two_edges()), {"t1", "t2"}), 2u);
  // Star with centre c and a leaf x; isolated terminals s1, s2.
  Graph star({"c", "x", "s1", "s2"}, {{"c", "x"}});
  EXPECT_EQ(rank_of(matching_dm(star), {"s1", "s2"}), 0u);
}

TEST(RankOf, AgreesWithFamilyMaximum) {
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto g = testing::random_graph(7, 0.4, rng);
    const auto d = matching_dm(g, i);
    const auto fam = enumerate_feasible(d);
    for (const auto& t : {LabelSet{"v0", "v1"}, LabelSet{"v2", "v3", "v4"}, LabelSet{"v0", "v6"}}) {
      EXPECT_EQ(rank_of(d, t), brute_rank(fam, t));
    }
  }
}

TEST(MinimalFeasibleSpanning, Examples) {
  EXPECT_TRUE(minimal_feasible_spanning(matching_dm(two_edges()), {}).empty());
  const auto b = minimal_feasible_spanning(matching_dm(two_edges()), {"t1", "t2"});
  EXPECT_EQ(b, (LabelSet{"t1", "u1", "t2", "u2"}));

  // T spanned by itself: triangle t1 t2 x with edge t1t2.
  Graph g({"t1", "t2", "x", "y"}, {{"t1", "t2"}, {"x", "y"}, {"t2", "x"}});
  const auto c = minimal_feasible_spanning(matching_dm(g), {"t1", "t2"});
  EXPECT_EQ(c, (LabelSet{"t1", "t2"}));
}

TEST(MinimalFeasibleSpanning, FeasibleSpanningAndMinimal) {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto g = testing::random_graph(8, 0.35, rng);
    const auto d = matching_dm(g, i);
    const auto fam = enumerate_feasible(d);
    const LabelSet t{"v0", "v1", "v2", "v3"};
    const auto k = brute_rank(fam, t);
    const auto b = minimal_feasible_spanning(d, t);
    EXPECT_TRUE(is_feasible(d, b));
    EXPECT_EQ(set_intersection(b, t).size(), k);
    EXPECT_LE(b.size(), 2 * k);
    // No feasible proper subset meets T in k elements.
    for (const auto& f : fam) {
      if (f.size() < b.size() && is_subset(f, b)) {
        EXPECT_LT(set_intersection(f, t).size(), k);
      }
    }
  }
}

TEST(EnumerateFeasible, SmallGraphs) {
  EXPECT_EQ(enumerate_feasible(matching_dm(edge_uv())), (Family{{}, {"u", "v"}}));
  EXPECT_EQ(enumerate_feasible(matching_dm(path_abc())), (Family{{}, {"a", "b"}, {"b", "c"}}));
  Graph tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(enumerate_feasible(matching_dm(tri)), (Family{{}, {"a", "b"}, {"a", "c"}, {"b", "c"}}));
}

TEST(EnumerateFeasible, GuardRejectsLargeGround) {
  Rng rng(1);
  const auto g = testing::random_graph(22, 0.1, rng);
  EXPECT_THROW(enumerate_feasible(matching_dm(g)), GuardError);
}

TEST(ExchangeAxiom, Examples) {
  Family even;
  for (const auto& s : all_subsets({"a", "b", "c", "d"})) {
    if (s.size() % 2 == 0) even.push_back(s);
  }
  EXPECT_TRUE(check_exchange_axiom(even));
  EXPECT_TRUE(check_exchange_axiom({{}, {"a", "b"}, {"b", "c"}}));
  EXPECT_FALSE(check_exchange_axiom({{}, {"a", "b", "c", "d"}}));
  EXPECT_TRUE(check_exchange_axiom({}));
}

TEST(ExchangeAxiom, HoldsForMatchingFamilies) {
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(7, 0.45, rng);
    EXPECT_TRUE(check_exchange_axiom(enumerate_feasible(matching_dm(g, i))));
  }
}

}  // namespace
}  // namespace dmkit
