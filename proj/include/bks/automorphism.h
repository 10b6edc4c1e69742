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

#include <vector>

#include "bks/graph.h"
#include "bks/rational.h"

namespace bks {

struct AutReport {
    Integer order;
    /// Each generator maps vertex v to generators[k][v].
    std::vector<std::vector<int>> generators;
    /// Orbit sizes along the base, whose product is order.
    std::vector<int> orbit_sizes;
};

/// Exact order of the color-preserving automorphism group. Throws
/// CapacityError above max_vertices.
AutReport aut_order(const Graph &graph, size_t max_vertices = 400);

/// Size of the permutation group generated by gens on n points, by a
/// Schreier-Sims style sift over the points in increasing order.
Integer group_order(const std::vector<std::vector<int>> &gens, size_t n);

/// Equitable partition of the vertices, starting from the vertex colors.
/// Color numbers depend only on the isomorphism class of the colored graph.
std::vector<int> refine_colors(const Graph &graph, std::vector<int> colors);

}  // namespace bks
