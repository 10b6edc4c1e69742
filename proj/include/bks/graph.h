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

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bks {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..n-1 with per-vertex bitset
/// adjacency and optional vertex colors (all 0 by default).
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t num_vertices);

    size_t size() const {
        return adjacency_.size();
    }
    void add_edge(size_t u, size_t v);
    bool adjacent(size_t u, size_t v) const {
        return adjacency_[u].test(v);
    }
    const Bits &neighbors(size_t v) const {
        return adjacency_[v];
    }
    size_t degree(size_t v) const {
        return adjacency_[v].count();
    }
    size_t edge_count() const;

    int color(size_t v) const {
        return colors_[v];
    }
    void set_color(size_t v, int color) {
        colors_[v] = color;
    }
    const std::vector<int> &colors() const {
        return colors_;
    }

    /// True iff perm (vertex v -> perm[v]) preserves adjacency and colors.
    bool is_automorphism(const std::vector<int> &perm) const;

    static Graph complete(size_t n);
    static Graph cycle(size_t n);

   private:
    std::vector<Bits> adjacency_;
    std::vector<int> colors_;
};

/// All cliques with exactly `size` vertices, each sorted ascending, listed in
/// lexicographic order.
std::vector<std::vector<int>> find_cliques(const Graph &graph, int size);

}  // namespace bks
