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

#include "bks/automorphism.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "bks/proofs.h"

namespace bks {

std::vector<int> refine_colors(const Graph &graph, std::vector<int> colors) {
    const size_t n = graph.size();
    size_t classes = 0;
    while (true) {
        std::vector<std::vector<int>> signatures(n);
        for (size_t v = 0; v < n; v++) {
            auto &sig = signatures[v];
            sig.push_back(colors[v]);
            const Bits &nb = graph.neighbors(v);
            for (size_t u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
                sig.push_back(colors[u]);
            }
            std::sort(sig.begin() + 1, sig.end());
        }
        std::vector<std::vector<int>> distinct = signatures;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (size_t v = 0; v < n; v++) {
            colors[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), signatures[v]) - distinct.begin());
        }
        if (distinct.size() == classes) {
            return colors;
        }
        classes = distinct.size();
    }
}

namespace {

std::vector<int> individualize(const Graph &graph, std::vector<int> colors, size_t v) {
    // A fresh color above every existing one, then refine.
    colors[v] = static_cast<int>(graph.size());
    return refine_colors(graph, std::move(colors));
}

/// Target cell: smallest non-singleton cell, lowest color among ties.
std::optional<int> target_cell(const std::vector<int> &colors) {
    std::map<int, int> sizes;
    for (int c : colors) {
        sizes[c]++;
    }
    std::optional<int> best;
    int best_size = 0;
    for (const auto &[c, s] : sizes) {
        if (s > 1 && (!best || s < best_size)) {
            best = c;
            best_size = s;
        }
    }
    return best;
}

std::vector<int> members(const std::vector<int> &colors, int cell) {
    std::vector<int> out;
    for (size_t v = 0; v < colors.size(); v++) {
        if (colors[v] == cell) {
            out.push_back(static_cast<int>(v));
        }
    }
    return out;
}

bool same_shape(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> sa = a;
    std::vector<int> sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

class AutSearch {
   public:
    explicit AutSearch(const Graph &graph) : g_(graph) {
    }

    /// Automorphism carrying the left partition onto the right one, if any.
    std::optional<std::vector<int>> match(const std::vector<int> &left, const std::vector<int> &right) {
        if (!same_shape(left, right)) {
            return std::nullopt;
        }
        auto cell = target_cell(left);
        if (!cell) {
            std::vector<int> at(g_.size());
            for (size_t v = 0; v < g_.size(); v++) {
                at[right[v]] = static_cast<int>(v);
            }
            std::vector<int> perm(g_.size());
            for (size_t v = 0; v < g_.size(); v++) {
                perm[v] = at[left[v]];
            }
            if (g_.is_automorphism(perm)) {
                return perm;
            }
            return std::nullopt;
        }
        std::vector<int> xs = members(left, *cell);
        std::vector<int> left_next = individualize(g_, left, xs.front());
        for (int y : members(right, *cell)) {
            auto found = match(left_next, individualize(g_, right, y));
            if (found) {
                return found;
            }
        }
        return std::nullopt;
    }

    /// Walks the first path of the search tree; on the way back up computes
    /// the orbit of each base point under the pointwise stabilizer above it.
    void descend(const std::vector<int> &colors, AutReport &report) {
        auto cell = target_cell(colors);
        if (!cell) {
            return;
        }
        std::vector<int> cands = members(colors, *cell);
        const int v = cands.front();
        std::vector<int> with_v = individualize(g_, colors, v);
        const size_t first_new = report.generators.size();
        descend(with_v, report);
        // Generators found below fix this level's base points as well.
        std::vector<std::vector<int>> level_gens(report.generators.begin() + static_cast<std::ptrdiff_t>(first_new),
                                                 report.generators.end());
        std::vector<bool> in_orbit = orbit_of(v, level_gens);
        for (int w : cands) {
            if (in_orbit[w]) {
                continue;
            }
            auto perm = match(with_v, individualize(g_, colors, w));
            if (perm) {
                report.generators.push_back(*perm);
                level_gens.push_back(*perm);
                in_orbit = orbit_of(v, level_gens);
            }
        }
        report.orbit_sizes.push_back(static_cast<int>(std::count(in_orbit.begin(), in_orbit.end(), true)));
    }

   private:
    std::vector<bool> orbit_of(int v, const std::vector<std::vector<int>> &gens) const {
        std::vector<bool> seen(g_.size(), false);
        std::vector<int> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto &gen : gens) {
                int y = gen[x];
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return seen;
    }

    const Graph &g_;
};

}  // namespace

AutReport aut_order(const Graph &graph, size_t max_vertices) {
    if (graph.size() > max_vertices) {
        throw CapacityError("automorphism search limited to " + std::to_string(max_vertices) + " vertices");
    }
    AutReport report;
    AutSearch search(graph);
    search.descend(refine_colors(graph, graph.colors()), report);
    std::reverse(report.orbit_sizes.begin(), report.orbit_sizes.end());
    report.order = 1;
    for (int s : report.orbit_sizes) {
        report.order *= s;
    }
    return report;
}

Integer group_order(const std::vector<std::vector<int>> &gens, size_t n) {
    // Schreier-Sims run to a fixed point: every Schreier generator of every
    // level must sift through the levels below it.
    using Perm = std::vector<int>;
    Perm identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    auto compose = [&](const Perm &first, const Perm &then) {
        Perm out(n);
        for (size_t k = 0; k < n; k++) {
            out[k] = then[first[k]];
        }
        return out;
    };
    auto inverse = [&](const Perm &p) {
        Perm out(n);
        for (size_t k = 0; k < n; k++) {
            out[p[k]] = static_cast<int>(k);
        }
        return out;
    };
    std::vector<int> base;
    std::vector<std::vector<Perm>> strong;  // strong[i] fixes base[0..i-1]
    std::vector<std::map<int, Perm>> transversal;
    auto level_gens = [&](size_t i) {
        std::vector<Perm> out;
        for (size_t k = i; k < strong.size(); k++) {
            out.insert(out.end(), strong[k].begin(), strong[k].end());
        }
        return out;
    };
    auto build = [&](size_t i) {
        auto &t = transversal[i];
        t.clear();
        t[base[i]] = identity;
        std::vector<int> queue{base[i]};
        auto gs = level_gens(i);
        for (size_t q = 0; q < queue.size(); q++) {
            for (const Perm &s : gs) {
                int y = s[queue[q]];
                if (!t.count(y)) {
                    t[y] = compose(t[queue[q]], s);
                    queue.push_back(y);
                }
            }
        }
    };
    // Adds g at the first level where sifting fails. Returns false when g
    // sifts to the identity.
    auto insert = [&](Perm g, size_t from) {
        for (size_t i = from; i < base.size(); i++) {
            auto it = transversal[i].find(g[base[i]]);
            if (it == transversal[i].end()) {
                strong[i].push_back(g);
                return true;
            }
            g = compose(g, inverse(it->second));
        }
        if (g == identity) {
            return false;
        }
        size_t point = 0;
        while (g[point] == static_cast<int>(point)) {
            point++;
        }
        base.push_back(static_cast<int>(point));
        strong.push_back({g});
        transversal.emplace_back();
        return true;
    };
    for (const Perm &g : gens) {
        if (g.size() != n) {
            throw std::invalid_argument("generator of the wrong degree");
        }
        if (insert(g, 0)) {
            for (size_t i = 0; i < base.size(); i++) {
                build(i);
            }
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = base.size(); i-- > 0 && !changed;) {
            auto gs = level_gens(i);
            auto t = transversal[i];
            for (auto it = t.begin(); it != t.end() && !changed; ++it) {
                for (const Perm &s : gs) {
                    Perm ts = compose(it->second, s);
                    Perm schreier = compose(ts, inverse(t.at(ts[base[i]])));
                    if (insert(schreier, i + 1)) {
                        changed = true;
                        break;
                    }
                }
            }
            if (changed) {
                for (size_t k = 0; k < base.size(); k++) {
                    build(k);
                }
            }
        }
    }
    Integer order = 1;
    for (const auto &t : transversal) {
        order *= static_cast<long>(t.size());
    }
    return order;
}

}  // namespace bks
