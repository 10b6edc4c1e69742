// Copyright 2026 The bks Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bks/graph.h"

#include <gtest/gtest.h>

using bks::Graph;

TEST(Graph, edges_are_symmetric) {
    Graph g(4);
    g.add_edge(0, 2);
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
}

TEST(Graph, automorphism_check) {
    Graph c = Graph::cycle(5);
    EXPECT_TRUE(c.is_automorphism({1, 2, 3, 4, 0}));
    EXPECT_FALSE(c.is_automorphism({0, 2, 1, 3, 4}));
    c.set_color(0, 1);
    EXPECT_FALSE(c.is_automorphism({1, 2, 3, 4, 0}));
    EXPECT_TRUE(c.is_automorphism({0, 4, 3, 2, 1}));
}

TEST(FindCliques, triangle) {
    auto cliques = bks::find_cliques(Graph::complete(3), 3);
    ASSERT_EQ(cliques.size(), 1u);
    EXPECT_EQ(cliques[0], (std::vector<int>{0, 1, 2}));
}

TEST(FindCliques, empty_graph_has_no_edges) {
    EXPECT_TRUE(bks::find_cliques(Graph(6), 2).empty());
    EXPECT_EQ(bks::find_cliques(Graph(6), 1).size(), 6u);
}

TEST(FindCliques, complete_graph_counts) {
    EXPECT_EQ(bks::find_cliques(Graph::complete(7), 3).size(), 35u);
    EXPECT_THROW(bks::find_cliques(Graph(3), 0), std::invalid_argument);
}

TEST(FindCliques, lexicographic_order) {
    auto cliques = bks::find_cliques(Graph::complete(4), 2);
    ASSERT_EQ(cliques.size(), 6u);
    EXPECT_TRUE(std::is_sorted(cliques.begin(), cliques.end()));
}
