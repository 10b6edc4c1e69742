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

#include "bks/ray.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bks/fixtures.h"
#include "bks/pauli.h"

namespace bks {

std::vector<Coord> canonical_coords(std::span<const Coord> coords) {
    Coord g = 0;
    for (Coord c : coords) {
        g = std::gcd(g, c);
    }
    if (g == 0) {
        throw std::invalid_argument("zero vector is not a ray");
    }
    auto first = std::find_if(coords.begin(), coords.end(), [](Coord c) { return c != 0; });
    if (*first < 0) {
        g = -g;
    }
    std::vector<Coord> out(coords.begin(), coords.end());
    for (Coord &c : out) {
        c /= g;
    }
    return out;
}

Coord inner(const Ray &a, const Ray &b) {
    if (a.coords.size() != b.coords.size()) {
        throw std::invalid_argument("inner product of rays of different length");
    }
    return std::inner_product(a.coords.begin(), a.coords.end(), b.coords.begin(), Coord{0});
}

Rational overlap_sq(const Ray &a, const Ray &b) {
    Coord na = inner(a, a);
    Coord nb = inner(b, b);
    if (na == 0 || nb == 0) {
        throw std::invalid_argument("overlap with a zero vector");
    }
    Integer dot = inner(a, b);
    return Rational(dot * dot, Integer(na) * nb);
}

RayCatalog::RayCatalog(int num_qubits, const std::vector<std::vector<Coord>> &coords, CatalogSource source)
    : num_qubits_(num_qubits), source_(source) {
    if (num_qubits < 1 || num_qubits > 16) {
        throw std::invalid_argument("unsupported qubit count");
    }
    std::set<std::vector<Coord>> seen;
    for (const auto &c : coords) {
        if (static_cast<int>(c.size()) != dimension()) {
            throw std::invalid_argument("ray length does not match 2^n");
        }
        Ray ray{static_cast<int>(rays_.size()) + 1, canonical_coords(c)};
        if (!seen.insert(ray.coords).second) {
            throw std::invalid_argument("ray " + std::to_string(ray.id) + " repeats an earlier ray");
        }
        rays_.push_back(std::move(ray));
    }
}

const Ray &RayCatalog::ray(int id) const {
    if (id < 1 || static_cast<size_t>(id) > rays_.size()) {
        throw std::out_of_range("ray id " + std::to_string(id) + " not in catalog");
    }
    return rays_[id - 1];
}

std::optional<int> RayCatalog::find(std::span<const Coord> coords) const {
    if (static_cast<int>(coords.size()) != dimension()) {
        return std::nullopt;
    }
    auto key = canonical_coords(coords);
    for (const auto &r : rays_) {
        if (r.coords == key) {
            return r.id;
        }
    }
    return std::nullopt;
}

std::string RayCatalog::name() const {
    if (source_ == CatalogSource::reference) {
        return "rays" + std::to_string(rays_.size());
    }
    return "generated" + std::to_string(num_qubits_) + "q";
}

Basis::Basis(std::vector<int> ids) : ray_ids(std::move(ids)) {
    std::sort(ray_ids.begin(), ray_ids.end());
    if (std::adjacent_find(ray_ids.begin(), ray_ids.end()) != ray_ids.end()) {
        throw std::invalid_argument("basis lists a ray twice");
    }
}

bool Basis::contains(int id) const {
    return std::binary_search(ray_ids.begin(), ray_ids.end(), id);
}

size_t shared_rays(const Basis &a, const Basis &b) {
    size_t count = 0;
    auto i = a.ray_ids.begin();
    auto j = b.ray_ids.begin();
    while (i != a.ray_ids.end() && j != b.ray_ids.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

void validate_basis(const Basis &basis, const RayCatalog &catalog) {
    if (static_cast<int>(basis.size()) != catalog.dimension()) {
        throw std::invalid_argument("basis must have " + std::to_string(catalog.dimension()) + " rays");
    }
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = i + 1; j < basis.size(); j++) {
            if (inner(catalog.ray(basis.ray_ids[i]), catalog.ray(basis.ray_ids[j])) != 0) {
                throw std::invalid_argument(
                    "rays " + std::to_string(basis.ray_ids[i]) + " and " + std::to_string(basis.ray_ids[j]) +
                    " are not orthogonal");
            }
        }
    }
}

RayCatalog catalog_paper(int num_qubits) {
    if (num_qubits < 2 || num_qubits > 4) {
        throw std::invalid_argument("reference catalogs exist for 2, 3 and 4 qubits only");
    }
    std::vector<std::vector<Coord>> coords;
    for (const auto &row : fixtures::ray_table(num_qubits)) {
        coords.emplace_back(row.begin(), row.end());
    }
    return RayCatalog(num_qubits, coords, CatalogSource::reference);
}

RayCatalog catalog_generated(int num_qubits) {
    std::string label;
    if (num_qubits == 2) {
        label = "square2q";
    } else if (num_qubits == 3) {
        label = "pentagram3q";
    } else {
        throw std::invalid_argument("ray generation is supported for 2 and 3 qubits only");
    }
    MagicConfiguration config = magic_configuration(label);
    std::vector<std::vector<Coord>> coords;
    std::set<std::vector<Coord>> seen;
    for (const auto &context : config.contexts) {
        for (auto &ray : joint_eigenbasis(context)) {
            if (seen.insert(ray).second) {
                coords.push_back(std::move(ray));
            }
        }
    }
    return RayCatalog(num_qubits, coords, CatalogSource::generated);
}

RayCatalog catalog_by_name(const std::string &name) {
    if (name == "rays24") {
        return catalog_paper(2);
    }
    if (name == "rays40") {
        return catalog_paper(3);
    }
    if (name == "rays80") {
        return catalog_paper(4);
    }
    if (name == "generated2q") {
        return catalog_generated(2);
    }
    if (name == "generated3q") {
        return catalog_generated(3);
    }
    throw std::invalid_argument("unknown catalog '" + name + "'");
}

Graph orthogonality_graph(const RayCatalog &catalog) {
    const auto &rays = catalog.rays();
    Graph g(rays.size());
    for (size_t i = 0; i < rays.size(); i++) {
        for (size_t j = i + 1; j < rays.size(); j++) {
            if (inner(rays[i], rays[j]) == 0) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::vector<Basis> enumerate_bases(const RayCatalog &catalog) {
    std::vector<Basis> bases;
    for (auto &clique : find_cliques(orthogonality_graph(catalog), catalog.dimension())) {
        for (int &v : clique) {
            v += 1;
        }
        bases.emplace_back(std::move(clique));
    }
    std::sort(bases.begin(), bases.end());
    return bases;
}

std::vector<Basis> numbered_bases(const RayCatalog &catalog) {
    std::vector<Basis> bases = enumerate_bases(catalog);
    if (catalog.source() != CatalogSource::reference || catalog.num_qubits() > 3) {
        return bases;
    }
    std::vector<Basis> reference;
    for (const auto &ids : fixtures::basis_table(catalog.num_qubits())) {
        reference.emplace_back(ids);
    }
    std::vector<Basis> sorted_reference = reference;
    std::sort(sorted_reference.begin(), sorted_reference.end());
    if (sorted_reference != bases) {
        throw std::logic_error("enumerated bases disagree with the reference basis table");
    }
    return reference;
}

bool catalogs_equivalent(const RayCatalog &a, const RayCatalog &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    std::set<std::vector<Coord>> left;
    std::set<std::vector<Coord>> right;
    for (const auto &r : a.rays()) {
        left.insert(r.coords);
    }
    for (const auto &r : b.rays()) {
        right.insert(r.coords);
    }
    return left == right;
}

}  // namespace bks
