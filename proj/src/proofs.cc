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

#include "bks/proofs.h"

#include <algorithm>
#include <bit>
#include <set>

#include "bks/fixtures.h"

namespace bks {

IncidenceStructure::IncidenceStructure(RayCatalog catalog, std::vector<Basis> bases)
    : catalog_(std::move(catalog)), bases_(std::move(bases)), matrix_(catalog_.size(), bases_.size()) {
    for (size_t k = 0; k < bases_.size(); k++) {
        validate_basis(bases_[k], catalog_);
        if (!index_.emplace(bases_[k], static_cast<int>(k) + 1).second) {
            throw std::invalid_argument("basis " + std::to_string(k + 1) + " is listed twice");
        }
        for (int id : bases_[k].ray_ids) {
            matrix_.set(id - 1, k);
        }
    }
}

IncidenceStructure IncidenceStructure::for_catalog(const RayCatalog &catalog) {
    return IncidenceStructure(catalog, numbered_bases(catalog));
}

const Basis &IncidenceStructure::basis(int id) const {
    if (id < 1 || static_cast<size_t>(id) > bases_.size()) {
        throw std::out_of_range("basis id " + std::to_string(id) + " out of range");
    }
    return bases_[id - 1];
}

std::optional<int> IncidenceStructure::find_basis(const Basis &basis) const {
    auto it = index_.find(basis);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string ProofSet::type() const {
    return std::to_string(v) + "-" + std::to_string(l) + subtype;
}

std::vector<int> ProofSet::ray_ids() const {
    std::set<int> all;
    for (const auto &b : bases) {
        all.insert(b.ray_ids.begin(), b.ray_ids.end());
    }
    return {all.begin(), all.end()};
}

ProofSet make_proof(std::vector<Basis> bases) {
    ProofSet p;
    p.bases = std::move(bases);
    p.l = static_cast<int>(p.bases.size());
    p.v = static_cast<int>(p.ray_ids().size());
    p.flags.parity = is_parity_proof(p);
    return p;
}

ProofSet make_proof(const IncidenceStructure &inc, std::vector<int> basis_ids) {
    std::sort(basis_ids.begin(), basis_ids.end());
    if (std::adjacent_find(basis_ids.begin(), basis_ids.end()) != basis_ids.end()) {
        throw std::invalid_argument("proof lists a basis twice");
    }
    std::vector<Basis> bases;
    for (int id : basis_ids) {
        bases.push_back(inc.basis(id));
    }
    ProofSet p = make_proof(std::move(bases));
    p.basis_ids = std::move(basis_ids);
    return p;
}

bool is_parity_proof(const ProofSet &proof) {
    if (proof.bases.size() % 2 == 0) {
        return false;
    }
    std::map<int, int> multiplicity;
    for (const auto &b : proof.bases) {
        for (int id : b.ray_ids) {
            multiplicity[id]++;
        }
    }
    return std::all_of(multiplicity.begin(), multiplicity.end(), [](const auto &kv) {
        return kv.second % 2 == 0;
    });
}

std::vector<Bits> kernel_gf2(const IncidenceStructure &inc) {
    return gf2_kernel(inc.matrix());
}

std::vector<ProofSet> enumerate_parity_proofs(const IncidenceStructure &inc, int max_dim) {
    std::vector<Bits> generators = kernel_gf2(inc);
    if (static_cast<int>(generators.size()) > max_dim) {
        throw CapacityError(
            "kernel dimension " + std::to_string(generators.size()) + " exceeds the enumeration limit " +
            std::to_string(max_dim));
    }
    std::vector<ProofSet> proofs;
    Bits current(inc.bases().size());
    // Gray-code walk: step k flips the generator at the lowest set bit of k.
    const std::uint64_t total = std::uint64_t{1} << generators.size();
    for (std::uint64_t k = 1; k < total; k++) {
        current ^= generators[std::countr_zero(k)];
        if (current.count() % 2 == 0) {
            continue;
        }
        std::vector<int> ids;
        for (size_t b = current.find_first(); b != Bits::npos; b = current.find_next(b)) {
            ids.push_back(static_cast<int>(b) + 1);
        }
        proofs.push_back(make_proof(inc, std::move(ids)));
    }
    std::sort(proofs.begin(), proofs.end(), [](const ProofSet &a, const ProofSet &b) {
        if (a.l != b.l) {
            return a.l < b.l;
        }
        return a.basis_ids < b.basis_ids;
    });
    return proofs;
}

Histogram proof_histogram(const ProofSet &proof, const DistanceTable &table) {
    if (proof.basis_ids.size() != proof.bases.size()) {
        throw std::invalid_argument("proof has no basis ids");
    }
    std::vector<int> positions;
    for (int id : proof.basis_ids) {
        positions.push_back(id - 1);
    }
    return table.histogram(positions);
}

namespace {

struct SubtypeRule {
    int dimension;
    int v;
    int l;
    const char *label;
    // (spectrum label, required count) pairs
    std::vector<std::pair<int, long>> counts;
};

const std::vector<SubtypeRule> &subtype_rules() {
    static const std::vector<SubtypeRule> kRules = {
        {4, 20, 11, "A", {{3, 0}, {5, 1}}},
        {4, 20, 11, "B", {{3, 1}, {5, 0}}},
        {4, 22, 13, "A", {{3, 3}, {5, 3}}},
        {4, 22, 13, "B", {{3, 4}, {5, 2}}},
    };
    return kRules;
}

}  // namespace

std::map<std::string, long> classify(std::vector<ProofSet> &proofs, const DistanceTable &table, int dimension) {
    std::map<std::string, long> counts;
    for (auto &p : proofs) {
        Histogram h = proof_histogram(p, table);
        p.subtype.clear();
        bool has_rules = false;
        for (const auto &rule : subtype_rules()) {
            if (rule.dimension != dimension || rule.v != p.v || rule.l != p.l) {
                continue;
            }
            has_rules = true;
            bool match = std::all_of(rule.counts.begin(), rule.counts.end(), [&](const auto &c) {
                return c.first <= static_cast<int>(h.size()) && h[c.first - 1] == c.second;
            });
            if (match) {
                p.subtype = rule.label;
                break;
            }
        }
        if (has_rules && p.subtype.empty()) {
            throw ClassificationError("proof of type " + p.type() + " has an unknown histogram signature");
        }
        counts[p.type()]++;
    }
    return counts;
}

bool odd_kernel_exists(const IncidenceStructure &inc) {
    Bits ones(inc.bases().size());
    ones.set();
    // Odd-weight kernel vectors exist iff the all-ones functional does not
    // vanish on the kernel, i.e. it is not a combination of the rows.
    return !in_row_space(inc.matrix(), ones);
}

ProofSet magic_square9_proof(const IncidenceStructure &inc2q) {
    return make_proof(inc2q, fixtures::magic_square9_bases());
}

std::vector<ProofSet> magic_square_proofs(const IncidenceStructure &inc2q) {
    std::vector<ProofSet> out;
    for (const auto &ids : fixtures::magic_square_proofs()) {
        out.push_back(make_proof(inc2q, ids));
    }
    return out;
}

std::vector<ProofSet> pentagram_proofs(const IncidenceStructure &inc3q) {
    std::vector<ProofSet> out;
    for (const auto &ids : fixtures::pentagram_proofs()) {
        out.push_back(make_proof(inc3q, ids));
    }
    return out;
}

ProofSet reference_proof(const std::string &name) {
    std::vector<std::vector<int>> sets;
    if (name == "eleven") {
        sets = fixtures::eleven_bases();
    } else if (name == "80-21") {
        sets = fixtures::four_qubit_proof(21);
    } else if (name == "80-22") {
        sets = fixtures::four_qubit_proof(22);
    } else if (name == "80-23") {
        sets = fixtures::four_qubit_proof(23);
    } else {
        throw std::invalid_argument("unknown proof '" + name + "'");
    }
    std::vector<Basis> bases;
    for (auto &s : sets) {
        bases.emplace_back(s);
    }
    return make_proof(std::move(bases));
}

}  // namespace bks
