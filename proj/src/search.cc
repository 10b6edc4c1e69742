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

#include "bks/search.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "bks/coloring.h"

namespace bks {

std::uint64_t uniform_index(std::mt19937_64 &rng, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("empty range");
    }
    // Rejection sampling over the largest multiple of n.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

namespace {

template <typename T>
void shuffle(std::vector<T> &items, std::mt19937_64 &rng) {
    for (size_t k = items.size(); k > 1; k--) {
        std::swap(items[k - 1], items[uniform_index(rng, k)]);
    }
}

std::vector<Basis> bases_of(const IncidenceStructure &inc, const std::vector<int> &ids) {
    std::vector<Basis> out;
    for (int id : ids) {
        out.push_back(inc.basis(id));
    }
    return out;
}

bool non_colorable(const IncidenceStructure &inc, const std::vector<int> &ids) {
    auto bases = bases_of(inc, ids);
    return !is_colorable(inc.catalog(), bases).has_value();
}

bool all_classes_present(const DistanceTable &table, const std::vector<int> &ids) {
    std::vector<int> positions;
    for (int id : ids) {
        positions.push_back(id - 1);
    }
    Histogram h = table.histogram(positions);
    return std::all_of(h.begin(), h.end(), [](long c) { return c > 0; });
}

class Searcher {
   public:
    Searcher(const IncidenceStructure &inc, const DistanceTable &table, const SearchParams &params,
             std::mt19937_64 &rng)
        : inc_(inc), table_(table), params_(params), rng_(rng) {
        const size_t n = inc.bases().size();
        disjoint_.assign(n, Bits(n));
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                if (shared_rays(inc.bases()[i], inc.bases()[j]) == 0) {
                    disjoint_[i].set(j);
                    disjoint_[j].set(i);
                }
            }
        }
        parts_ = static_cast<size_t>(inc.catalog().size()) / inc.catalog().dimension();
    }

    /// Random pairwise-disjoint bases covering every ray, one draw per step.
    std::optional<std::vector<int>> draw_partition(std::uint64_t &draws) {
        const size_t n = inc_.bases().size();
        while (draws < params_.budget) {
            std::vector<int> chosen;
            Bits allowed(n);
            allowed.set();
            while (chosen.size() < parts_) {
                draws++;
                size_t count = allowed.count();
                if (count == 0) {
                    break;
                }
                size_t pick = uniform_index(rng_, count);
                size_t b = allowed.find_first();
                while (pick-- > 0) {
                    b = allowed.find_next(b);
                }
                chosen.push_back(static_cast<int>(b) + 1);
                allowed &= disjoint_[b];
            }
            if (chosen.size() == parts_) {
                std::sort(chosen.begin(), chosen.end());
                return chosen;
            }
        }
        return std::nullopt;
    }

    /// Grows the partition with random bases until criteria (a) and (c)
    /// hold, then drops non-partition bases while all criteria survive.
    std::optional<std::vector<int>> select(const std::vector<int> &partition) {
        const int n = static_cast<int>(inc_.bases().size());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        shuffle(order, rng_);
        std::vector<int> ids = partition;
        size_t next = 0;
        auto satisfied = [&](const std::vector<int> &set) {
            return all_classes_present(table_, set) && non_colorable(inc_, set);
        };
        while (!satisfied(ids)) {
            while (next < order.size() &&
                   std::find(partition.begin(), partition.end(), order[next]) != partition.end()) {
                next++;
            }
            if (next == order.size() || static_cast<int>(ids.size()) >= params_.max_bases) {
                return std::nullopt;
            }
            ids.push_back(order[next++]);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> candidates;
            for (int id : ids) {
                if (std::find(partition.begin(), partition.end(), id) == partition.end()) {
                    candidates.push_back(id);
                }
            }
            shuffle(candidates, rng_);
            for (int id : candidates) {
                std::vector<int> trial;
                for (int other : ids) {
                    if (other != id) {
                        trial.push_back(other);
                    }
                }
                if (satisfied(trial)) {
                    ids = std::move(trial);
                    changed = true;
                }
            }
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    }

   private:
    const IncidenceStructure &inc_;
    const DistanceTable &table_;
    const SearchParams &params_;
    std::mt19937_64 &rng_;
    std::vector<Bits> disjoint_;
    size_t parts_ = 0;
};

}  // namespace

std::vector<int> greedy_shrink(
    const IncidenceStructure &inc, std::vector<int> basis_ids, std::mt19937_64 &rng, std::vector<int> *trace) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> order = basis_ids;
        shuffle(order, rng);
        for (int id : order) {
            std::vector<int> trial;
            for (int other : basis_ids) {
                if (other != id) {
                    trial.push_back(other);
                }
            }
            if (non_colorable(inc, trial)) {
                basis_ids = std::move(trial);
                changed = true;
                if (trace != nullptr) {
                    trace->push_back(static_cast<int>(basis_ids.size()));
                }
            }
        }
    }
    std::sort(basis_ids.begin(), basis_ids.end());
    return basis_ids;
}

SearchResult search_4q(
    const IncidenceStructure &inc, const DistanceTable &table, std::uint64_t seed, const SearchParams &params) {
    if (table.size() != inc.bases().size()) {
        throw std::invalid_argument("distance table does not match the incidence structure");
    }
    std::mt19937_64 rng(seed);
    Searcher searcher(inc, table, params, rng);
    SearchResult best;
    best.seed = seed;
    bool found = false;
    std::uint64_t draws = 0;
    int attempt = 0;
    for (; attempt < params.attempts; attempt++) {
        auto partition = searcher.draw_partition(draws);
        if (!partition) {
            break;
        }
        auto selected = searcher.select(*partition);
        if (!selected) {
            continue;
        }
        std::vector<int> trace;
        std::vector<int> shrunk = greedy_shrink(inc, *selected, rng, &trace);
        bool better = !found || selected->size() < best.selected.basis_ids.size() ||
                      (selected->size() == best.selected.basis_ids.size() &&
                       shrunk.size() < best.shrunk.basis_ids.size());
        if (better) {
            best.selected = make_proof(inc, *selected);
            best.partition = *partition;
            best.shrunk = make_proof(inc, shrunk);
            best.shrink_trace = std::move(trace);
            found = true;
        }
    }
    best.draws = draws;
    best.attempts_used = attempt;
    if (!found) {
        throw SearchFailure("no non-colorable selection found within the budget; retry with another seed");
    }
    for (ProofSet *p : {&best.selected, &best.shrunk}) {
        p->flags.bks_verified = verify_bks_proof(*p, inc.catalog());
    }
    return best;
}

}  // namespace bks
