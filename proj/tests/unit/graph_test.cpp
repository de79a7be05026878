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

#include <gtest/gtest.h>

#include "dmkit/types.hpp"

namespace dmkit {
namespace {

TEST(SetHelpers, Basics) {
  const LabelSet a{"a", "b", "c"};
  const LabelSet b{"b", "d"};
  EXPECT_EQ(symmetric_difference(a, b), (LabelSet{"a", "c", "d"}));
  EXPECT_EQ(set_union(a, b), (LabelSet{"a", "b", "c", "d"}));
  EXPECT_EQ(set_minus(a, b), (LabelSet{"a", "c"}));
  EXPECT_EQ(set_intersection(a, b), LabelSet{"b"});
  EXPECT_TRUE(is_subset({"a"}, a));
  EXPECT_FALSE(is_subset(b, a));
  EXPECT_TRUE(intersects(a, b));
  EXPECT_FALSE(intersects({"x"}, a));
  EXPECT_EQ(to_string(b), "{b,d}");
  EXPECT_EQ(canonical({{"b"}, {}, {"a", "b"}, {"b"}}), (Family{{}, {"a", "b"}, {"b"}}));
}

TEST(Graph, BuildAndQuery) {
  Graph g({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge("b", "a"));
  EXPECT_FALSE(g.has_edge("a", "c"));
  EXPECT_EQ(g.degree("b"), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{"a", "b"}, {"b", "c"}}));
}

TEST(Graph, RejectsBadEdits) {
  Graph g({"a", "b"});
  EXPECT_THROW(g.add_vertex("a"), GraphError);
  EXPECT_THROW(g.add_edge("a", "a"), GraphError);
  EXPECT_THROW(g.add_edge("a", "z"), GraphError);
  g.add_edge("a", "b");
  EXPECT_THROW(g.add_edge("b", "a"), GraphError);
  EXPECT_THROW(g.remove_vertex("z"), UnknownLabelError);
  EXPECT_THROW(g.remove_edge("a", "z"), GraphError);
}

TEST(Graph, RemoveAndRestrict) {
  Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  Graph h = g;
  h.remove_vertex("b");
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_FALSE(h.contains("b"));
  EXPECT_EQ(g.induced_subgraph({"a", "b", "c"}), Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(g.without({"b", "d"}), Graph({"a", "c"}));
  h.remove_edge("c", "d");
  EXPECT_EQ(h.num_edges(), 1u);
}

}  // namespace
}  // namespace dmkit
