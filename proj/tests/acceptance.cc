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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits with
// status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "bks/automorphism.h"
#include "bks/coloring.h"
#include "bks/fixtures.h"
#include "bks/metric.h"
#include "bks/pauli.h"
#include "bks/proofs.h"
#include "bks/search.h"
#include "bks/symmetry.h"

namespace {

using namespace bks;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string show(const Histogram &h) {
    std::ostringstream s;
    for (size_t k = 0; k < h.size(); k++) {
        s << (k ? "," : "") << h[k];
    }
    return s.str();
}

long pairs(const Histogram &h) {
    long total = 0;
    for (long c : h) {
        total += c;
    }
    return total;
}

struct Systems {
    RayCatalog cat2 = catalog_paper(2);
    RayCatalog cat3 = catalog_paper(3);
    RayCatalog cat4 = catalog_paper(4);
    IncidenceStructure inc2 = IncidenceStructure::for_catalog(cat2);
    IncidenceStructure inc3 = IncidenceStructure::for_catalog(cat3);
    IncidenceStructure inc4 = IncidenceStructure::for_catalog(cat4);
    DistanceTable table2{inc2.bases(), cat2};
    DistanceTable table3{inc3.bases(), cat3};
    DistanceTable table4{inc4.bases(), cat4};
    std::vector<ProofSet> proofs2;
    std::vector<ProofSet> proofs3;
};

Systems *sys = nullptr;

std::vector<Rational> fracs(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Rational> out;
    for (auto [p, q] : list) {
        out.emplace_back(p, q);
    }
    return out;
}

void criterion1(Outcome &o) {
    bool two = catalogs_equivalent(catalog_generated(2), catalog_paper(2));
    bool three = catalogs_equivalent(catalog_generated(3), catalog_paper(3));
    o.require(two, "2-qubit generated catalog differs");
    o.require(three, "3-qubit generated catalog differs");
    o.detail << "24 and 40 generated rays match the reference lists";
}

void criterion2(Outcome &o) {
    size_t n2 = enumerate_bases(sys->cat2).size();
    size_t n3 = enumerate_bases(sys->cat3).size();
    size_t n4 = enumerate_bases(sys->cat4).size();
    o.detail << "bases " << n2 << "/" << n3 << "/" << n4;
    o.require(n2 == 24 && n3 == 25 && n4 == 625, "basis counts");
    for (int n : {2, 3}) {
        const auto &inc = n == 2 ? sys->inc2 : sys->inc3;
        const auto &table = fixtures::basis_table(n);
        bool same = inc.bases().size() == table.size();
        for (size_t k = 0; same && k < table.size(); k++) {
            same = inc.bases()[k] == Basis(table[k]);
        }
        o.require(same, std::to_string(n) + "-qubit numbering");
    }
}

void criterion3(Outcome &o) {
    o.require(sys->table2.spectrum().classes == fracs({{1, 3}, {7, 12}, {2, 3}, {5, 6}, {1, 1}}), "2-qubit spectrum");
    o.require(sys->table3.spectrum().classes == fracs({{3, 7}, {9, 14}, {6, 7}}), "3-qubit spectrum");
    o.require(sys->table4.spectrum().classes ==
                  fracs({{1, 5}, {3, 10}, {2, 5}, {1, 2}, {3, 5}, {7, 10}, {4, 5}}),
              "4-qubit spectrum");
    o.detail << "classes";
    for (const auto *t : {&sys->table2, &sys->table3, &sys->table4}) {
        o.detail << " {";
        for (size_t k = 0; k < t->spectrum().size(); k++) {
            o.detail << (k ? "," : "") << t->spectrum().classes[k].str();
        }
        o.detail << "}";
    }
}

/// Counts and histogram rows per type; every proof of a type must share its row.
void census(Outcome &o, std::vector<ProofSet> &proofs, const DistanceTable &table, int dimension,
            const std::map<std::string, std::pair<long, Histogram>> &expected) {
    std::map<std::string, long> counts;
    try {
        counts = classify(proofs, table, dimension);
    } catch (const ClassificationError &e) {
        o.require(false, e.what());
        return;
    }
    std::map<std::string, std::set<Histogram>> rows;
    bool pair_identity = true;
    for (const ProofSet &p : proofs) {
        Histogram h = proof_histogram(p, table);
        rows[p.type()].insert(h);
        pair_identity = pair_identity && 2 * pairs(h) == static_cast<long>(p.l) * (p.l - 1);
    }
    o.require(pair_identity, "2*sum(counts) = l(l-1)");
    for (const auto &[type, want] : expected) {
        long got = counts.count(type) ? counts[type] : 0;
        o.detail << " " << type << ":" << got;
        o.require(got == want.first, type + " count");
        const auto &seen = rows[type];
        o.require(seen.size() == 1, type + " proofs have more than one histogram");
        if (!seen.empty()) {
            const Histogram &h = *seen.begin();
            if (h != want.second) {
                o.require(false, type + " histogram " + show(h) + " vs reference " + show(want.second) +
                                     " (reference sums to " + std::to_string(pairs(want.second)) + " pairs, l(l-1)/2 = " +
                                     std::to_string(pairs(h)) + ")");
            }
        }
    }
    o.require(counts.size() == expected.size(), "unexpected proof types");
}

void criterion4(Outcome &o) {
    o.detail << "total " << sys->proofs2.size() << ";";
    o.require(sys->proofs2.size() == 512, "512 parity proofs");
    census(o, sys->proofs2, sys->table2, 4,
           {{"18-9", {16, {0, 18, 0, 18, 0}}},
            {"20-11A", {96, {6, 18, 0, 30, 1}}},
            {"20-11B", {144, {6, 18, 1, 30, 0}}},
            {"22-13A", {96, {12, 18, 3, 42, 3}}},
            {"22-13B", {144, {12, 18, 4, 42, 2}}},
            {"24-15", {16, {18, 18, 9, 54, 6}}}});
}

void criterion5(Outcome &o) {
    o.detail << "total " << sys->proofs3.size() << ";";
    o.require(sys->proofs3.size() == 1024, "1024 parity proofs");
    census(o, sys->proofs3, sys->table3, 8,
           {{"36-11", {320, {4, 30, 21}}}, {"38-13", {640, {12, 30, 26}}}, {"40-15", {64, {20, 30, 55}}}});
}

void criterion6(Outcome &o) {
    long non_colorable = 0;
    for (const auto *set : {&sys->proofs2, &sys->proofs3}) {
        const RayCatalog &cat = set == &sys->proofs2 ? sys->cat2 : sys->cat3;
        auto verdicts = verify_all(*set, cat);
        non_colorable += std::count(verdicts.begin(), verdicts.end(), true);
    }
    o.detail << non_colorable << "/1536 parity proofs non-colorable";
    o.require(non_colorable == 1536, "some parity proof is colorable");
    long witnesses = 0;
    long singles = 0;
    for (const IncidenceStructure *inc : {&sys->inc2, &sys->inc3, &sys->inc4}) {
        for (const Basis &b : inc->bases()) {
            std::vector<Basis> one{b};
            std::vector<Ray> rays;
            for (int id : b.ray_ids) {
                rays.push_back(inc->catalog().ray(id));
            }
            auto c = is_colorable(inc->catalog(), one);
            singles++;
            witnesses += c && is_valid_coloring(rays, one, inc->catalog().dimension(), *c);
        }
    }
    o.detail << "; " << witnesses << "/" << singles << " single bases colorable";
    o.require(witnesses == singles, "single basis without witness");
    long deletions = 0;
    long colorable = 0;
    for (const ProofSet &p : magic_square_proofs(sys->inc2)) {
        for (bool c : criticality(p, sys->cat2).basis_deletion_colorable) {
            deletions++;
            colorable += c;
        }
    }
    o.detail << "; " << colorable << "/" << deletions << " 18-9 deletions colorable";
    o.require(deletions == 144 && colorable == deletions, "18-9 minus one basis");
}

void criterion7(Outcome &o) {
    const std::map<std::string, Histogram> rows{{"80-21", {1, 1, 14, 19, 60, 64, 51}},
                                                {"80-22", {1, 1, 17, 19, 65, 64, 64}},
                                                {"80-23", {1, 3, 17, 19, 76, 69, 68}}};
    for (const auto &[name, want] : rows) {
        ProofSet p = reference_proof(name);
        bool proof = verify_bks_proof(p, sys->cat4);
        Histogram h = histogram(p.bases, sys->table4.spectrum(), sys->cat4);
        o.detail << name << (proof ? " non-colorable " : " colorable ") << show(h) << "; ";
        o.require(proof, name + " non-colorable");
        o.require(h == want, name + " histogram");
    }
    CriticalityReport report = criticality(reference_proof("80-21"), sys->cat4);
    long colorable = std::count(report.basis_deletion_colorable.begin(), report.basis_deletion_colorable.end(), true);
    o.detail << "80-21 single-basis deletions colorable: " << colorable << "/21";
    o.require(report.basis_critical, "80-21 basis-critical");
}

void criterion8(Outcome &o) {
    FamilyCheckResult r = family_check(reference_proof("80-21"), sys->cat4, 4);
    o.detail << "family of 4 disjoint bases, " << r.tuples << " tuples, " << r.extensions << " extensions";
    o.require(r.non_colorable, "a consistent assignment was found");
}

void criterion9(Outcome &o) {
    std::vector<std::string> issues;
    auto scan = [&](const std::string &name, const IncidenceStructure &inc, const DistanceTable &table,
                    const std::function<bool(size_t, int)> &allowed) {
        long count = 0;
        std::map<std::pair<size_t, int>, long> bad;
        for (size_t i = 0; i < inc.bases().size(); i++) {
            for (size_t j = i + 1; j < inc.bases().size(); j++) {
                count++;
                size_t s = shared_rays(inc.bases()[i], inc.bases()[j]);
                if (!allowed(s, table.label(i, j))) {
                    bad[{s, table.label(i, j)}]++;
                }
            }
        }
        for (const auto &[key, n] : bad) {
            issues.push_back(name + ": " + std::to_string(n) + " pairs with " + std::to_string(key.first) +
                                 " shared rays at D^2 = " + table.spectrum().classes[key.second - 1].str());
        }
        return count;
    };
    long c2 = scan("2 qubits", sys->inc2, sys->table2, [](size_t s, int label) {
        return (s == 0 && (label == 4 || label == 5)) || (s == 1 && label == 2) || (s == 2 && label == 1);
    });
    long c3 = scan("3 qubits", sys->inc3, sys->table3, [](size_t s, int label) {
        return (s == 0 && label == 3) || (s == 2 && label == 2) || (s == 4 && label == 1);
    });
    long c4 = scan("4 qubits", sys->inc4, sys->table4, [](size_t s, int label) { return s % 2 == 0 && label == 7 - static_cast<int>(s / 2); });
    o.detail << "pairs scanned " << c2 << "/" << c3 << "/" << c4;
    for (const std::string &issue : issues) {
        o.require(false, issue);
    }
    o.require(c4 == 195000, "4-qubit pair count");
}

void criterion10(Outcome &o) {
    auto order = [](const Graph &g) { return aut_order(g).order; };
    std::vector<std::vector<int>> ms9;
    for (const Basis &b : magic_square9_proof(sys->inc2).bases) {
        ms9.push_back(b.ray_ids);
    }
    std::vector<std::pair<std::string, std::pair<Integer, Integer>>> checks{
        {"square2q", {order(config_incidence_graph(magic_configuration("square2q"))), 72}},
        {"pentagram3q", {order(config_incidence_graph(magic_configuration("pentagram3q"))), 120}},
        {"18-9 crossing", {order(crossing_graph(ms9, 1)), 72}},
        {"36-11 family k=8", {order(proof_family_crossing(pentagram_proofs(sys->inc3), 8)), 2304}},
        {"18-9 family k=3", {order(proof_family_crossing(magic_square_proofs(sys->inc2), 3)), 1152}},
        {"K6", {order(Graph::complete(6)), 720}},
        {"C8", {order(Graph::cycle(8)), 16}},
        {"empty10", {order(Graph(10)), 3628800}},
    };
    for (const auto &[name, values] : checks) {
        o.detail << name << "=" << values.first.str() << " ";
        o.require(values.first == values.second, name);
    }
}

void criterion11(Outcome &o) {
    auto proofs = magic_square_proofs(sys->inc2);
    std::vector<std::vector<int>> items;
    for (const ProofSet &p : proofs) {
        items.push_back(p.basis_ids);
    }
    auto overlaps = realized_overlaps(items);
    o.detail << "18-9 pair overlaps {";
    for (size_t s : overlaps) {
        o.detail << " " << s;
    }
    o.detail << " };";
    o.require(overlaps == std::set<size_t>{3, 5}, "18-9 overlaps");
    const auto &index = fixtures::magic_square_indices();
    for (int line = 0; line < 8; line++) {
        std::vector<int> members;
        for (int k = 0; k < 4; k++) {
            int pos = line < 4 ? 4 * line + k : 4 * k + (line - 4);
            members.push_back(index[pos]);
        }
        std::vector<int> rays;
        bool disjoint = true;
        for (size_t a = 0; a < members.size(); a++) {
            const Basis &b = sys->inc2.basis(members[a]);
            rays.insert(rays.end(), b.ray_ids.begin(), b.ray_ids.end());
            for (size_t c = a + 1; c < members.size(); c++) {
                disjoint = disjoint && shared_rays(b, sys->inc2.basis(members[c])) == 0;
            }
        }
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        o.detail << (line < 4 ? " row " : " col ") << (line % 4 + 1) << ": " << rays.size() << " rays"
                 << (disjoint ? "" : " (overlapping)");
        o.require(disjoint && rays.size() == 24, "line partitions the 24 rays");
    }
}

void criterion12(Outcome &o) {
    SearchParams params;
    int best_shrunk = 1 << 30;
    for (std::uint64_t seed : {1, 2, 3}) {
        SearchResult r;
        try {
            r = search_4q(sys->inc4, sys->table4, seed, params);
        } catch (const SearchFailure &e) {
            o.require(false, "seed " + std::to_string(seed) + ": " + e.what());
            continue;
        }
        bool verified = verify_bks_proof(r.selected, sys->cat4) && verify_bks_proof(r.shrunk, sys->cat4);
        o.detail << "seed " << seed << ": l=" << r.selected.l << " shrunk to " << r.shrunk.l << "; ";
        o.require(verified, "seed " + std::to_string(seed) + " verification");
        o.require(r.selected.l <= 23, "seed " + std::to_string(seed) + " l <= 23");
        best_shrunk = std::min(best_shrunk, r.shrunk.l);
    }
    o.require(best_shrunk <= 21, "no seed shrank to 21 bases");
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    auto start = Clock::now();
    Systems systems;
    systems.proofs2 = enumerate_parity_proofs(systems.inc2);
    systems.proofs3 = enumerate_parity_proofs(systems.inc3);
    sys = &systems;
    std::cout << "setup " << std::chrono::duration<double>(Clock::now() - start).count() << " s\n";

    const std::vector<std::pair<const char *, void (*)(Outcome &)>> criteria{
        {"catalog regeneration", criterion1},
        {"basis counts", criterion2},
        {"distance spectra", criterion3},
        {"parity-proof census, 2 qubits", criterion4},
        {"parity-proof census, 3 qubits", criterion5},
        {"non-colorability oracle", criterion6},
        {"80-21 verification", criterion7},
        {"exhaustive disjoint-family check", criterion8},
        {"overlap to distance maps", criterion9},
        {"automorphism orders", criterion10},
        {"structural properties", criterion11},
        {"randomized search", criterion12},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            criteria[k].second(o);
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        failures += !o.pass;
        std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << " ("
                  << std::fixed << std::setprecision(2) << seconds << " s): " << o.detail.str() << "\n";
        std::cout.unsetf(std::ios::fixed);
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
