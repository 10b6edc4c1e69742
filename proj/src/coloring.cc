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

#include <algorithm>
#include <unordered_map>

#include "bks/parallel.h"

namespace bks {

namespace {

struct Problem {
    std::vector<int> ids;
    std::vector<Bits> ortho;
    std::vector<Bits> groups;        // bases with a full set of members
    std::vector<Bits> basis_masks;   // every basis, full or not
};

Problem build_problem(std::span<const Ray> rays, std::span<const Basis> bases, int dimension) {
    Problem p;
    const size_t m = rays.size();
    std::unordered_map<int, size_t> local;
    for (size_t k = 0; k < m; k++) {
        if (!local.emplace(rays[k].id, k).second) {
            throw std::invalid_argument("ray id " + std::to_string(rays[k].id) + " listed twice");
        }
        p.ids.push_back(rays[k].id);
    }
    p.ortho.assign(m, Bits(m));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (inner(rays[i], rays[j]) == 0) {
                p.ortho[i].set(j);
                p.ortho[j].set(i);
            }
        }
    }
    for (const auto &b : bases) {
        Bits mask(m);
        for (int id : b.ray_ids) {
            auto it = local.find(id);
            if (it == local.end()) {
                throw std::invalid_argument("basis uses ray " + std::to_string(id) + " outside the ray set");
            }
            mask.set(it->second);
        }
        p.basis_masks.push_back(mask);
        if (static_cast<int>(b.size()) == dimension) {
            p.groups.push_back(std::move(mask));
        }
    }
    return p;
}

/// Depth-first search branching on the unsatisfied basis with the fewest
/// candidates; a true ray forces every ray orthogonal to it false.
class Solver {
   public:
    explicit Solver(const Problem &problem) : p_(problem) {
    }

    std::optional<Bits> solve() {
        size_t m = p_.ids.size();
        Bits trues(m);
        Bits falses(m);
        if (search(trues, falses)) {
            return result_;
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const {
        return nodes_;
    }

   private:
    bool search(const Bits &trues, const Bits &falses) {
        nodes_++;
        const Bits *best = nullptr;
        Bits best_candidates;
        size_t best_count = SIZE_MAX;
        for (const Bits &g : p_.groups) {
            if (g.intersects(trues)) {
                continue;
            }
            Bits candidates = g - falses;
            size_t count = candidates.count();
            if (count == 0) {
                return false;
            }
            if (count < best_count) {
                best = &g;
                best_count = count;
                best_candidates = std::move(candidates);
                if (count == 1) {
                    break;
                }
            }
        }
        if (best == nullptr) {
            result_ = trues;
            return true;
        }
        for (size_t r = best_candidates.find_first(); r != Bits::npos; r = best_candidates.find_next(r)) {
            Bits t = trues;
            t.set(r);
            Bits f = falses | p_.ortho[r];
            if (search(t, f)) {
                return true;
            }
        }
        return false;
    }

    const Problem &p_;
    Bits result_;
    std::uint64_t nodes_ = 0;
};

std::vector<Ray> union_rays(const RayCatalog &catalog, std::span<const Basis> bases) {
    std::vector<int> ids;
    for (const auto &b : bases) {
        ids.insert(ids.end(), b.ray_ids.begin(), b.ray_ids.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Ray> rays;
    for (int id : ids) {
        rays.push_back(catalog.ray(id));
    }
    return rays;
}

}  // namespace

std::vector<int> Coloring::true_rays() const {
    std::vector<int> out;
    for (const auto &[id, value] : assignment) {
        if (value) {
            out.push_back(id);
        }
    }
    return out;
}

std::optional<Coloring> is_colorable(
    std::span<const Ray> rays, std::span<const Basis> bases, int dimension, std::uint64_t *nodes) {
    Problem problem = build_problem(rays, bases, dimension);
    Solver solver(problem);
    auto solution = solver.solve();
    if (nodes != nullptr) {
        *nodes = solver.nodes();
    }
    if (!solution) {
        return std::nullopt;
    }
    Coloring c;
    for (size_t k = 0; k < problem.ids.size(); k++) {
        c.assignment[problem.ids[k]] = solution->test(k);
    }
    return c;
}

std::optional<Coloring> is_colorable(const RayCatalog &catalog, std::span<const Basis> bases) {
    std::vector<Ray> rays = union_rays(catalog, bases);
    return is_colorable(rays, bases, catalog.dimension());
}

bool is_valid_coloring(std::span<const Ray> rays, std::span<const Basis> bases, int dimension, const Coloring &c) {
    auto value = [&](int id) {
        auto it = c.assignment.find(id);
        if (it == c.assignment.end()) {
            throw std::invalid_argument("coloring misses ray " + std::to_string(id));
        }
        return it->second;
    };
    for (const auto &b : bases) {
        int trues = 0;
        for (int id : b.ray_ids) {
            trues += value(id);
        }
        if (trues > 1 || (static_cast<int>(b.size()) == dimension && trues != 1)) {
            return false;
        }
    }
    for (size_t i = 0; i < rays.size(); i++) {
        for (size_t j = i + 1; j < rays.size(); j++) {
            if (value(rays[i].id) && value(rays[j].id) && inner(rays[i], rays[j]) == 0) {
                return false;
            }
        }
    }
    return true;
}

bool verify_bks_proof(const ProofSet &proof, const RayCatalog &catalog) {
    return !is_colorable(catalog, proof.bases).has_value();
}

std::vector<bool> verify_all(std::span<const ProofSet> proofs, const RayCatalog &catalog) {
    std::vector<char> verdicts(proofs.size(), 0);
    parallel_for(proofs.size(), [&](size_t k) { verdicts[k] = verify_bks_proof(proofs[k], catalog); });
    return std::vector<bool>(verdicts.begin(), verdicts.end());
}

CriticalityReport criticality(const ProofSet &proof, const RayCatalog &catalog) {
    CriticalityReport report;
    for (size_t k = 0; k < proof.bases.size(); k++) {
        std::vector<Basis> rest = proof.bases;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        report.basis_deletion_colorable.push_back(is_colorable(catalog, rest).has_value());
    }
    const std::vector<Ray> rays = union_rays(catalog, proof.bases);
    for (const Ray &removed : rays) {
        std::vector<Ray> kept;
        for (const Ray &r : rays) {
            if (r.id != removed.id) {
                kept.push_back(r);
            }
        }
        std::vector<Basis> reduced;
        for (const Basis &b : proof.bases) {
            Basis copy = b;
            std::erase(copy.ray_ids, removed.id);
            reduced.push_back(std::move(copy));
        }
        report.ray_deletion_colorable[removed.id] = is_colorable(kept, reduced, catalog.dimension()).has_value();
    }
    report.basis_critical = std::all_of(
        report.basis_deletion_colorable.begin(), report.basis_deletion_colorable.end(), [](bool b) { return b; });
    report.ray_critical = std::all_of(
        report.ray_deletion_colorable.begin(), report.ray_deletion_colorable.end(),
        [](const auto &kv) { return kv.second; });
    return report;
}

bool is_basis_critical(const ProofSet &proof, const RayCatalog &catalog) {
    for (size_t k = 0; k < proof.bases.size(); k++) {
        std::vector<Basis> rest = proof.bases;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (!is_colorable(catalog, rest)) {
            return false;
        }
    }
    return true;
}

bool is_ray_critical(const ProofSet &proof, const RayCatalog &catalog) {
    return criticality(proof, catalog).ray_critical;
}

std::optional<std::vector<int>> disjoint_family(std::span<const Basis> bases, int width) {
    std::vector<int> chosen;
    auto extend = [&](auto &&self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == width) {
            return true;
        }
        for (int k = start; k < static_cast<int>(bases.size()); k++) {
            bool disjoint = std::all_of(chosen.begin(), chosen.end(), [&](int c) {
                return shared_rays(bases[c], bases[k]) == 0;
            });
            if (!disjoint) {
                continue;
            }
            chosen.push_back(k);
            if (self(self, k + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (width < 1 || !extend(extend, 0)) {
        return std::nullopt;
    }
    return chosen;
}

namespace {

class FamilyChecker {
   public:
    FamilyChecker(const ProofSet &proof, const RayCatalog &catalog) : proof_(proof), catalog_(catalog) {
    }

    /// True iff some completion of the current true set satisfies every basis.
    bool completes(std::vector<int> &trues, std::uint64_t &extensions) {
        const Basis *open = nullptr;
        for (const Basis &b : proof_.bases) {
            int hits = 0;
            for (int t : trues) {
                hits += b.contains(t);
            }
            if (hits > 1) {
                return false;
            }
            if (hits == 0 && open == nullptr) {
                open = &b;
            }
        }
        if (open == nullptr) {
            return true;
        }
        for (int r : open->ray_ids) {
            if (!compatible(r, trues)) {
                continue;
            }
            extensions++;
            trues.push_back(r);
            bool ok = completes(trues, extensions);
            trues.pop_back();
            if (ok) {
                return true;
            }
        }
        return false;
    }

    bool compatible(int r, const std::vector<int> &trues) const {
        const Ray &ray = catalog_.ray(r);
        return std::none_of(trues.begin(), trues.end(), [&](int t) { return inner(ray, catalog_.ray(t)) == 0; });
    }

   private:
    const ProofSet &proof_;
    const RayCatalog &catalog_;
};

}  // namespace

FamilyCheckResult family_check(const ProofSet &proof, const RayCatalog &catalog, int width) {
    auto family = disjoint_family(proof.bases, width);
    if (!family) {
        throw PreconditionError("no family of " + std::to_string(width) + " mutually disjoint bases");
    }
    FamilyCheckResult result;
    result.family = *family;
    FamilyChecker checker(proof, catalog);
    std::vector<const Basis *> members;
    for (int k : *family) {
        members.push_back(&proof.bases[k]);
    }
    std::vector<size_t> digits(width, 0);
    std::vector<int> trues;
    bool found = false;
    while (!found) {
        result.tuples++;
        trues.clear();
        bool clash = false;
        for (int k = 0; k < width && !clash; k++) {
            int r = members[k]->ray_ids[digits[k]];
            clash = !checker.compatible(r, trues);
            trues.push_back(r);
        }
        if (!clash) {
            found = checker.completes(trues, result.extensions);
        }
        // Odometer step over the family tuple.
        int k = width - 1;
        while (k >= 0 && ++digits[k] == members[k]->size()) {
            digits[k] = 0;
            k--;
        }
        if (k < 0) {
            break;
        }
    }
    result.non_colorable = !found;
    return result;
}

bool family_check_4q(const ProofSet &proof, const RayCatalog &catalog) {
    return family_check(proof, catalog, 4).non_colorable;
}

}  // namespace bks
