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

#include <set>
#include <vector>

#include "bks/graph.h"
#include "bks/pauli.h"
#include "bks/proofs.h"

namespace bks {

/// One vertex per item; u ~ v iff the items share exactly k elements.
Graph crossing_graph(const std::vector<std::vector<int>> &items, size_t k);

/// Intersection sizes realized by distinct pairs of items.
std::set<size_t> realized_overlaps(const std::vector<std::vector<int>> &items);

/// Bipartite membership graph: one vertex per distinct operator (up to
/// phase, color 0, in order of first appearance) followed by one vertex per
/// context (color 1).
Graph config_incidence_graph(const MagicConfiguration &config);

/// Crossing graph over the basis sets of proofs (basis ids when known,
/// explicit ray sets otherwise).
Graph proof_family_crossing(const std::vector<ProofSet> &proofs, size_t overlap);

/// Rays (color 0) joined to the bases containing them (color 1).
Graph catalog_incidence_graph(const IncidenceStructure &inc);

/// Ray permutations induced by signed permutations of the coordinates that
/// map the catalog onto itself. perm[k] is the 0-based image of ray k+1.
/// Throws CapacityError for dimension above 8.
std::vector<std::vector<int>> coordinate_symmetries(const RayCatalog &catalog);

/// Image of a basis-id set under a ray permutation, as sorted basis ids.
std::vector<int> apply_to_bases(const IncidenceStructure &inc, const std::vector<int> &perm,
                                const std::vector<int> &basis_ids);

}  // namespace bks
