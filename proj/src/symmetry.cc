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

#include "bks/symmetry.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace bks {

namespace {

size_t intersection_size(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> sa = a;
    std::vector<int> sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::vector<int> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    return common.size();
}

std::vector<int> proof_key(const ProofSet &p, std::map<Basis, int> &ids) {
    if (!p.basis_ids.empty()) {
        return p.basis_ids;
    }
    std::vector<int> out;
    for (const Basis &b : p.bases) {
        out.push_back(ids.emplace(b, static_cast<int>(ids.size())).first->second);
    }
    return out;
}

}  // namespace

Graph crossing_graph(const std::vector<std::vector<int>> &items, size_t k) {
    Graph g(items.size());
    for (size_t i = 0; i < items.size(); i++) {
        for (size_t j = i + 1; j < items.size(); j++) {
            if (intersection_size(items[i], items[j]) == k) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::set<size_t> realized_overlaps(const std::vector<std::vector<int>> &items) {
    std::set<size_t> out;
    for (size_t i = 0; i < items.size(); i++) {
        for (size_t j = i + 1; j < items.size(); j++) {
            out.insert(intersection_size(items[i], items[j]));
        }
    }
    return out;
}

Graph config_incidence_graph(const MagicConfiguration &config) {
    std::vector<PauliOperator> ops;
    std::vector<std::vector<size_t>> membership;
    for (const auto &context : config.contexts) {
        std::vector<size_t> row;
        for (const auto &op : context) {
            auto it = std::find_if(ops.begin(), ops.end(), [&](const PauliOperator &o) { return o.same_up_to_phase(op); });
            if (it == ops.end()) {
                ops.push_back(op);
                it = ops.end() - 1;
            }
            row.push_back(static_cast<size_t>(it - ops.begin()));
        }
        membership.push_back(std::move(row));
    }
    Graph g(ops.size() + membership.size());
    for (size_t c = 0; c < membership.size(); c++) {
        const size_t vertex = ops.size() + c;
        g.set_color(vertex, 1);
        for (size_t o : membership[c]) {
            g.add_edge(o, vertex);
        }
    }
    return g;
}

Graph proof_family_crossing(const std::vector<ProofSet> &proofs, size_t overlap) {
    std::map<Basis, int> ids;
    std::vector<std::vector<int>> items;
    for (const ProofSet &p : proofs) {
        items.push_back(proof_key(p, ids));
    }
    return crossing_graph(items, overlap);
}

Graph catalog_incidence_graph(const IncidenceStructure &inc) {
    const size_t rays = inc.catalog().size();
    Graph g(rays + inc.bases().size());
    for (size_t b = 0; b < inc.bases().size(); b++) {
        g.set_color(rays + b, 1);
        for (int id : inc.bases()[b].ray_ids) {
            g.add_edge(static_cast<size_t>(id - 1), rays + b);
        }
    }
    return g;
}

std::vector<std::vector<int>> coordinate_symmetries(const RayCatalog &catalog) {
    const int d = catalog.dimension();
    if (d > 8) {
        throw CapacityError("coordinate symmetries limited to dimension 8");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    do {
        for (unsigned signs = 0; signs < (1u << d); signs++) {
            std::vector<int> perm;
            for (const Ray &r : catalog.rays()) {
                std::vector<Coord> image(d);
                for (int k = 0; k < d; k++) {
                    image[order[k]] = (signs >> k & 1) ? -r.coords[k] : r.coords[k];
                }
                auto found = catalog.find(image);
                if (!found) {
                    break;
                }
                perm.push_back(*found - 1);
            }
            if (perm.size() == catalog.size()) {
                out.push_back(std::move(perm));
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> apply_to_bases(const IncidenceStructure &inc, const std::vector<int> &perm,
                                const std::vector<int> &basis_ids) {
    std::vector<int> out;
    for (int id : basis_ids) {
        std::vector<int> rays;
        for (int r : inc.basis(id).ray_ids) {
            rays.push_back(perm[r - 1] + 1);
        }
        auto image = inc.find_basis(Basis(rays));
        if (!image) {
            throw std::invalid_argument("permutation does not preserve the bases");
        }
        out.push_back(*image);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bks
