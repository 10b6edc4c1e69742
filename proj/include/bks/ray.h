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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bks/graph.h"
#include "bks/rational.h"

namespace bks {

using Coord = std::int64_t;

/// Primitive integer representative of a real ray, first nonzero entry
/// positive. Ids are 1-based.
struct Ray {
    int id = 0;
    std::vector<Coord> coords;

    bool operator==(const Ray &other) const = default;
};

/// Divides out the gcd and flips the sign so the first nonzero entry is
/// positive. Throws std::invalid_argument on the zero vector.
std::vector<Coord> canonical_coords(std::span<const Coord> coords);

Coord inner(const Ray &a, const Ray &b);

/// (a.b)^2 / (|a|^2 |b|^2).
Rational overlap_sq(const Ray &a, const Ray &b);

enum class CatalogSource { reference, generated };

class RayCatalog {
   public:
    /// Canonicalizes every vector; ids are assigned 1..n in input order.
    /// Throws on wrong length or projectively repeated rays.
    RayCatalog(int num_qubits, const std::vector<std::vector<Coord>> &coords, CatalogSource source);

    int num_qubits() const {
        return num_qubits_;
    }
    int dimension() const {
        return 1 << num_qubits_;
    }
    size_t size() const {
        return rays_.size();
    }
    CatalogSource source() const {
        return source_;
    }
    const std::vector<Ray> &rays() const {
        return rays_;
    }
    const Ray &ray(int id) const;
    /// Id of the ray spanned by coords, if present.
    std::optional<int> find(std::span<const Coord> coords) const;

    /// "rays24", "rays40", "rays80" for reference catalogs; otherwise
    /// "generated<N>q".
    std::string name() const;

   private:
    int num_qubits_;
    CatalogSource source_;
    std::vector<Ray> rays_;
};

/// Sorted set of ray ids forming an orthogonal basis.
struct Basis {
    std::vector<int> ray_ids;

    Basis() = default;
    explicit Basis(std::vector<int> ids);

    size_t size() const {
        return ray_ids.size();
    }
    bool contains(int id) const;
    auto operator<=>(const Basis &other) const = default;
};

size_t shared_rays(const Basis &a, const Basis &b);

/// Throws std::invalid_argument unless the basis has dimension() members
/// that are pairwise orthogonal rays of the catalog.
void validate_basis(const Basis &basis, const RayCatalog &catalog);

/// The 24-, 40- or 80-ray reference catalog (num_qubits 2, 3, 4).
RayCatalog catalog_paper(int num_qubits);

/// Rays regenerated as joint eigenvectors of the contexts of the 2-qubit
/// square or 3-qubit pentagram.
RayCatalog catalog_generated(int num_qubits);

RayCatalog catalog_by_name(const std::string &name);

/// Vertex per ray (vertex k is ray id k+1), edge iff orthogonal.
Graph orthogonality_graph(const RayCatalog &catalog);

/// Every orthogonal basis contained in the catalog, sorted by ray-id tuple.
std::vector<Basis> enumerate_bases(const RayCatalog &catalog);

/// enumerate_bases() in reporting order: reference numbering for the 2- and
/// 3-qubit reference catalogs (checked against the reference tables),
/// lexicographic otherwise. Basis id k+1 is element k.
std::vector<Basis> numbered_bases(const RayCatalog &catalog);

/// Projective equality of ray sets.
bool catalogs_equivalent(const RayCatalog &a, const RayCatalog &b);

}  // namespace bks
