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

#include <stdexcept>

namespace bks {

Graph::Graph(size_t num_vertices) : adjacency_(num_vertices, Bits(num_vertices)), colors_(num_vertices, 0) {
}

void Graph::add_edge(size_t u, size_t v) {
    if (u >= size() || v >= size()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    adjacency_[u].set(v);
    adjacency_[v].set(u);
}

size_t Graph::edge_count() const {
    size_t total = 0;
    for (const auto &row : adjacency_) {
        total += row.count();
    }
    return total / 2;
}

bool Graph::is_automorphism(const std::vector<int> &perm) const {
    if (perm.size() != size()) {
        return false;
    }
    Bits seen(size());
    for (size_t v = 0; v < size(); v++) {
        if (perm[v] < 0 || static_cast<size_t>(perm[v]) >= size() || seen.test(perm[v])) {
            return false;
        }
        seen.set(perm[v]);
        if (colors_[v] != colors_[perm[v]]) {
            return false;
        }
    }
    for (size_t u = 0; u < size(); u++) {
        const Bits &row = adjacency_[u];
        for (size_t v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
            if (!adjacent(perm[u], perm[v])) {
                return false;
            }
        }
    }
    return true;
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::cycle(size_t n) {
    Graph g(n);
    for (size_t u = 0; n > 2 && u < n; u++) {
        g.add_edge(u, (u + 1) % n);
    }
    return g;
}

namespace {

void extend_clique(
    const Graph &graph, std::vector<int> &clique, const Bits &candidates, int size,
    std::vector<std::vector<int>> &out) {
    if (static_cast<int>(clique.size()) == size) {
        out.push_back(clique);
        return;
    }
    // Not enough candidates left to complete the clique.
    if (static_cast<int>(clique.size() + candidates.count()) < size) {
        return;
    }
    for (size_t v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        Bits next = candidates & graph.neighbors(v);
        // Only extend with higher-numbered vertices so each clique appears once.
        next.reset(0, v + 1);
        clique.push_back(static_cast<int>(v));
        extend_clique(graph, clique, next, size, out);
        clique.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> find_cliques(const Graph &graph, int size) {
    std::vector<std::vector<int>> out;
    if (size < 1) {
        throw std::invalid_argument("clique size must be at least 1");
    }
    std::vector<int> clique;
    Bits all(graph.size());
    all.set();
    extend_clique(graph, clique, all, size, out);
    return out;
}

}  // namespace bks
