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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bks/proofs.h"
#include "bks/ray.h"

namespace bks {

/// Truth assignment over ray ids.
struct Coloring {
    std::map<int, bool> assignment;

    std::vector<int> true_rays() const;
};

/// Searches for a coloring of `rays`: every basis with a full set of
/// dimension members has exactly one true ray, and no two orthogonal rays
/// (over the whole ray list, not only within bases) are both true. Bases
/// with fewer members only get the orthogonality constraint. Every basis
/// must be a subset of the ray ids. Returns nullopt when exhaustive search
/// finds no coloring.
std::optional<Coloring> is_colorable(
    std::span<const Ray> rays, std::span<const Basis> bases, int dimension, std::uint64_t *nodes = nullptr);

/// Ray set taken as the union of the bases.
std::optional<Coloring> is_colorable(const RayCatalog &catalog, std::span<const Basis> bases);

/// Independent check of the coloring rules.
bool is_valid_coloring(std::span<const Ray> rays, std::span<const Basis> bases, int dimension, const Coloring &c);

bool verify_bks_proof(const ProofSet &proof, const RayCatalog &catalog);

/// verify_bks_proof over many proofs, spread across parallel_for workers.
std::vector<bool> verify_all(std::span<const ProofSet> proofs, const RayCatalog &catalog);

struct CriticalityReport {
    /// Per basis position: is the system colorable once it is removed?
    std::vector<bool> basis_deletion_colorable;
    /// Per covered ray id: colorable once the ray is removed everywhere?
    std::map<int, bool> ray_deletion_colorable;
    bool basis_critical = false;
    bool ray_critical = false;
};

CriticalityReport criticality(const ProofSet &proof, const RayCatalog &catalog);
bool is_basis_critical(const ProofSet &proof, const RayCatalog &catalog);
bool is_ray_critical(const ProofSet &proof, const RayCatalog &catalog);

class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct FamilyCheckResult {
    bool non_colorable = false;
    /// Positions (into proof.bases) of the mutually disjoint family used.
    std::vector<int> family;
    /// One true ray per family basis: number of tuples enumerated.
    std::uint64_t tuples = 0;
    /// Extra true rays tried beyond a family tuple.
    std::uint64_t extensions = 0;
};

/// Exhaustive check in the style used for the 4-qubit proofs: fix a family
/// of `width` mutually disjoint bases, enumerate every choice of one true ray
/// in each of them, then extend each choice ray by ray through the first
/// basis still lacking a true ray. Any coloring picks exactly one ray per
/// family basis, so the enumeration covers all colorings. Throws
/// PreconditionError when no such family exists.
FamilyCheckResult family_check(const ProofSet &proof, const RayCatalog &catalog, int width);
bool family_check_4q(const ProofSet &proof, const RayCatalog &catalog);

/// First family (lexicographic in positions) of `width` mutually disjoint bases.
std::optional<std::vector<int>> disjoint_family(std::span<const Basis> bases, int width);

}  // namespace bks
