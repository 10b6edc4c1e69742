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

#include <gtest/gtest.h>

#include "bks/automorphism.h"

using bks::Integer;
using bks::IncidenceStructure;

namespace {

const IncidenceStructure &inc2() {
    static const IncidenceStructure inc = IncidenceStructure::for_catalog(bks::catalog_paper(2));
    return inc;
}

const IncidenceStructure &inc3() {
    static const IncidenceStructure inc = IncidenceStructure::for_catalog(bks::catalog_paper(3));
    return inc;
}

std::vector<std::vector<int>> basis_items(const bks::ProofSet &p) {
    std::vector<std::vector<int>> items;
    for (const auto &b : p.bases) {
        items.push_back(b.ray_ids);
    }
    return items;
}

}  // namespace

TEST(Crossing, basic) {
    std::vector<std::vector<int>> items{{1, 2}, {2, 3}, {4, 5}};
    auto g = bks::crossing_graph(items, 1);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(bks::crossing_graph(items, 3).edge_count(), 0u);
    EXPECT_EQ(bks::realized_overlaps(items), (std::set<size_t>{0, 1}));
}

TEST(Crossing, magic_square9_is_rook_graph) {
    auto g = bks::crossing_graph(basis_items(bks::magic_square9_proof(inc2())), 1);
    EXPECT_EQ(g.size(), 9u);
    for (size_t v = 0; v < g.size(); v++) {
        EXPECT_EQ(g.degree(v), 4u);
    }
    EXPECT_EQ(bks::aut_order(g).order, Integer(72));
}

TEST(Crossing, magic_square_family) {
    auto proofs = bks::magic_square_proofs(inc2());
    std::vector<std::vector<int>> items;
    for (const auto &p : proofs) {
        items.push_back(p.basis_ids);
    }
    EXPECT_EQ(bks::realized_overlaps(items), (std::set<size_t>{3, 5}));
    auto g = bks::proof_family_crossing(proofs, 3);
    for (size_t v = 0; v < g.size(); v++) {
        EXPECT_EQ(g.degree(v), 6u);
    }
    EXPECT_EQ(bks::aut_order(g).order, Integer(1152));
}

TEST(Crossing, pentagram_family) {
    auto proofs = bks::pentagram_proofs(inc3());
    auto g = bks::proof_family_crossing(proofs, 8);
    for (size_t v = 0; v < g.size(); v++) {
        EXPECT_EQ(g.degree(v), 5u);
    }
    EXPECT_EQ(bks::aut_order(g).order, Integer(2304));
}

TEST(ConfigGraph, shapes) {
    struct Case {
        const char *label;
        size_t operators;
        size_t degree;
    };
    for (auto c : {Case{"square2q", 9, 3}, Case{"pentagram3q", 10, 4}, Case{"rectangle4q", 11, 0}}) {
        auto config = bks::magic_configuration(c.label);
        auto g = bks::config_incidence_graph(config);
        EXPECT_EQ(g.size(), c.operators + config.contexts.size()) << c.label;
        for (size_t k = 0; k < config.contexts.size(); k++) {
            size_t v = c.operators + k;
            EXPECT_EQ(g.color(v), 1);
            EXPECT_EQ(g.degree(v), config.contexts[k].size());
            if (c.degree != 0) {
                EXPECT_EQ(g.degree(v), c.degree);
            }
        }
    }
}

TEST(ConfigGraph, orders) {
    EXPECT_EQ(bks::aut_order(bks::config_incidence_graph(bks::magic_configuration("square2q"))).order, Integer(72));
    EXPECT_EQ(bks::aut_order(bks::config_incidence_graph(bks::magic_configuration("pentagram3q"))).order,
              Integer(120));
}

TEST(CoordinateSymmetries, two_qubit_proofs_form_one_orbit) {
    auto syms = bks::coordinate_symmetries(inc2().catalog());
    ASSERT_FALSE(syms.empty());
    auto proofs = bks::magic_square_proofs(inc2());
    std::set<std::vector<int>> family;
    for (const auto &p : proofs) {
        family.insert(p.basis_ids);
    }
    std::set<std::vector<int>> orbit;
    for (const auto &s : syms) {
        auto image = bks::apply_to_bases(inc2(), s, proofs[0].basis_ids);
        EXPECT_TRUE(family.count(image));
        orbit.insert(image);
    }
    EXPECT_EQ(orbit.size(), 16u);
}

TEST(CoordinateSymmetries, parity_proofs_closed) {
    auto syms = bks::coordinate_symmetries(inc2().catalog());
    auto proofs = bks::enumerate_parity_proofs(inc2());
    std::set<std::vector<int>> all;
    for (const auto &p : proofs) {
        all.insert(p.basis_ids);
    }
    for (size_t k = 0; k < syms.size(); k += 17) {
        for (size_t j = 0; j < proofs.size(); j += 13) {
            EXPECT_TRUE(all.count(bks::apply_to_bases(inc2(), syms[k], proofs[j].basis_ids)));
        }
    }
}

TEST(CatalogGraph, bipartite_incidence) {
    auto g = bks::catalog_incidence_graph(inc2());
    EXPECT_EQ(g.size(), 48u);
    EXPECT_EQ(g.edge_count(), 96u);
    auto report = bks::aut_order(g);
    EXPECT_EQ(bks::group_order(report.generators, g.size()), report.order);
}
