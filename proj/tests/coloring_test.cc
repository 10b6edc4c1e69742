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

#include "bks/coloring.h"

#include <gtest/gtest.h>

#include "bks/parallel.h"

using bks::Basis;
using bks::IncidenceStructure;
using bks::ProofSet;

namespace {

const IncidenceStructure &inc2() {
    static const IncidenceStructure inc = IncidenceStructure::for_catalog(bks::catalog_paper(2));
    return inc;
}

std::vector<bks::Ray> rays_of(const bks::RayCatalog &catalog, const std::vector<Basis> &bases) {
    std::set<int> ids;
    for (const auto &b : bases) {
        ids.insert(b.ray_ids.begin(), b.ray_ids.end());
    }
    std::vector<bks::Ray> out;
    for (int id : ids) {
        out.push_back(catalog.ray(id));
    }
    return out;
}

}  // namespace

TEST(Colorable, single_basis) {
    std::vector<Basis> bases{Basis({1, 2, 3, 4})};
    auto c = bks::is_colorable(inc2().catalog(), bases);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->true_rays().size(), 1u);
    EXPECT_TRUE(bks::is_valid_coloring(rays_of(inc2().catalog(), bases), bases, 4, *c));
}

TEST(Colorable, magic_square9_is_a_proof) {
    ProofSet p = bks::magic_square9_proof(inc2());
    EXPECT_FALSE(bks::is_colorable(inc2().catalog(), p.bases).has_value());
    EXPECT_TRUE(bks::verify_bks_proof(p, inc2().catalog()));
}

TEST(Colorable, witnesses_are_valid) {
    for (const ProofSet &p : bks::magic_square_proofs(inc2())) {
        for (size_t k = 0; k < p.bases.size(); k++) {
            std::vector<Basis> rest = p.bases;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            auto c = bks::is_colorable(inc2().catalog(), rest);
            ASSERT_TRUE(c.has_value());
            EXPECT_TRUE(bks::is_valid_coloring(rays_of(inc2().catalog(), rest), rest, 4, *c));
        }
    }
}

TEST(Colorable, orthogonality_across_bases_counts) {
    // Two disjoint bases: rays 1 and 2 are orthogonal but sit in different
    // bases here, so they may not both be true.
    auto catalog = inc2().catalog();
    std::vector<bks::Ray> rays{catalog.ray(1), catalog.ray(2)};
    std::vector<Basis> partial{Basis({1}), Basis({2})};
    bks::Coloring both;
    both.assignment = {{1, true}, {2, true}};
    EXPECT_FALSE(bks::is_valid_coloring(rays, partial, 4, both));
}

TEST(Colorable, deficient_bases_allow_all_false) {
    auto catalog = inc2().catalog();
    std::vector<bks::Ray> rays{catalog.ray(1), catalog.ray(2), catalog.ray(3)};
    std::vector<Basis> bases{Basis({1, 2, 3})};
    auto c = bks::is_colorable(rays, bases, 4);
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(c->true_rays().empty());
}

TEST(Colorable, rejects_foreign_rays) {
    auto catalog = inc2().catalog();
    std::vector<bks::Ray> rays{catalog.ray(1)};
    std::vector<Basis> bases{Basis({1, 2, 3, 4})};
    EXPECT_THROW(bks::is_colorable(rays, bases, 4), std::invalid_argument);
}

TEST(Criticality, magic_square_proofs) {
    for (const ProofSet &p : bks::magic_square_proofs(inc2())) {
        EXPECT_TRUE(bks::is_basis_critical(p, inc2().catalog()));
    }
}

TEST(Criticality, report_shape) {
    ProofSet p = bks::magic_square9_proof(inc2());
    auto report = bks::criticality(p, inc2().catalog());
    EXPECT_EQ(report.basis_deletion_colorable.size(), 9u);
    EXPECT_EQ(report.ray_deletion_colorable.size(), 18u);
    EXPECT_TRUE(report.basis_critical);
    EXPECT_EQ(report.ray_critical, bks::is_ray_critical(p, inc2().catalog()));
}

TEST(VerifyAll, matches_serial) {
    auto proofs = bks::enumerate_parity_proofs(inc2());
    auto verdicts = bks::verify_all(proofs, inc2().catalog());
    ASSERT_EQ(verdicts.size(), proofs.size());
    for (size_t k = 0; k < proofs.size(); k += 37) {
        EXPECT_EQ(verdicts[k], bks::verify_bks_proof(proofs[k], inc2().catalog()));
    }
    EXPECT_TRUE(std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; }));
}

TEST(PaperStyle, agrees_with_search) {
    ProofSet p = bks::magic_square9_proof(inc2());
    auto result = bks::family_check(p, inc2().catalog(), 1);
    EXPECT_TRUE(result.non_colorable);
    EXPECT_EQ(result.tuples, 4u);
    std::vector<Basis> rest(p.bases.begin(), p.bases.end() - 1);
    ProofSet smaller = bks::make_proof(rest);
    EXPECT_FALSE(bks::family_check(smaller, inc2().catalog(), 1).non_colorable);
}

TEST(PaperStyle, needs_disjoint_family) {
    ProofSet p = bks::magic_square9_proof(inc2());
    EXPECT_THROW(bks::family_check(p, inc2().catalog(), 9), bks::PreconditionError);
    EXPECT_FALSE(bks::disjoint_family(p.bases, 9).has_value());
    auto family = bks::disjoint_family(p.bases, 2);
    ASSERT_TRUE(family.has_value());
    EXPECT_EQ(bks::shared_rays(p.bases[(*family)[0]], p.bases[(*family)[1]]), 0u);
}

TEST(PaperStyle, four_qubit_proof) {
    auto catalog = bks::catalog_paper(4);
    EXPECT_TRUE(bks::family_check_4q(bks::reference_proof("80-21"), catalog));
}

TEST(Parallel, thread_count_respects_env) {
    setenv("BKS_THREADS", "3", 1);
    EXPECT_EQ(bks::thread_count(), 3);
    setenv("BKS_THREADS", "junk", 1);
    EXPECT_GE(bks::thread_count(), 1);
    unsetenv("BKS_THREADS");
}

TEST(Parallel, covers_every_index_and_rethrows) {
    setenv("BKS_THREADS", "4", 1);
    std::vector<int> hits(1000, 0);
    bks::parallel_for(hits.size(), [&](size_t k) { hits[k]++; });
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    EXPECT_THROW(bks::parallel_for(10, [](size_t k) {
                     if (k == 5) {
                         throw std::runtime_error("boom");
                     }
                 }),
                 std::runtime_error);
    unsetenv("BKS_THREADS");
}
