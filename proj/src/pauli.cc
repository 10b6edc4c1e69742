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

#include "bks/pauli.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "bks/ray.h"

namespace bks {

namespace {

void check_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits != q.num_qubits) {
        throw DimensionError(
            "operators act on " + std::to_string(p.num_qubits) + " and " + std::to_string(q.num_qubits) + " qubits");
    }
}

std::uint32_t qubit_mask(int num_qubits, int qubit) {
    if (qubit < 1 || qubit > num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    return std::uint32_t{1} << (num_qubits - qubit);
}

using Vec = std::vector<std::int64_t>;

void make_primitive(Vec &v) {
    std::int64_t g = 0;
    for (auto c : v) {
        g = std::gcd(g, c);
    }
    if (g > 1) {
        for (auto &c : v) {
            c /= g;
        }
    }
}

/// Maximal linearly independent subset (over Q) of vs, kept in input order.
std::vector<Vec> independent_subset(const std::vector<Vec> &vs) {
    std::vector<Vec> echelon;
    std::vector<size_t> pivots;
    std::vector<Vec> kept;
    for (const Vec &v : vs) {
        Vec r = v;
        for (size_t k = 0; k < echelon.size(); k++) {
            std::int64_t a = echelon[k][pivots[k]];
            std::int64_t b = r[pivots[k]];
            if (b == 0) {
                continue;
            }
            for (size_t j = 0; j < r.size(); j++) {
                r[j] = a * r[j] - b * echelon[k][j];
            }
            make_primitive(r);
        }
        auto nz = std::find_if(r.begin(), r.end(), [](std::int64_t c) { return c != 0; });
        if (nz == r.end()) {
            continue;
        }
        pivots.push_back(static_cast<size_t>(nz - r.begin()));
        echelon.push_back(std::move(r));
        kept.push_back(v);
    }
    return kept;
}

}  // namespace

PauliOperator PauliOperator::identity(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 16) {
        throw DimensionError("qubit count must be in 1..16");
    }
    return PauliOperator{num_qubits, 0, 0, 0};
}

PauliOperator PauliOperator::from_text(std::string_view text) {
    std::uint8_t phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        pos++;
    }
    std::string_view letters = text.substr(pos);
    if (letters.empty() || letters.size() > 16) {
        throw std::invalid_argument("bad operator text '" + std::string(text) + "'");
    }
    PauliOperator p = identity(static_cast<int>(letters.size()));
    for (size_t k = 0; k < letters.size(); k++) {
        std::uint32_t bit = qubit_mask(p.num_qubits, static_cast<int>(k) + 1);
        switch (letters[k]) {
            case 'I':
                break;
            case 'X':
                p.xs |= bit;
                break;
            case 'Z':
                p.zs |= bit;
                break;
            case 'Y':
                p.xs |= bit;
                p.zs |= bit;
                phase += 1;
                break;
            default:
                throw std::invalid_argument("bad operator text '" + std::string(text) + "'");
        }
    }
    p.phase = phase % 4;
    return p;
}

PauliOperator PauliOperator::single(int num_qubits, int qubit, char letter) {
    std::string text(num_qubits, 'I');
    qubit_mask(num_qubits, qubit);
    text[qubit - 1] = letter;
    return from_text(text);
}

bool PauliOperator::x_at(int qubit) const {
    return (xs & qubit_mask(num_qubits, qubit)) != 0;
}

bool PauliOperator::z_at(int qubit) const {
    return (zs & qubit_mask(num_qubits, qubit)) != 0;
}

std::string PauliOperator::str() const {
    int ys = std::popcount(xs & zs);
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[((phase - ys) % 4 + 4) % 4];
    for (int q = 1; q <= num_qubits; q++) {
        bool x = x_at(q);
        bool z = z_at(q);
        out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    // Z^a X^b = (-1)^(a.b) X^b Z^a.
    int swaps = std::popcount(p.zs & q.xs);
    PauliOperator r = p;
    r.xs ^= q.xs;
    r.zs ^= q.zs;
    r.phase = static_cast<std::uint8_t>((p.phase + q.phase + 2 * swaps) % 4);
    return r;
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    return std::popcount((p.xs & q.zs) ^ (p.zs & q.xs)) % 2 == 0;
}

IntMatrix matrix(const PauliOperator &p) {
    if (!p.is_real()) {
        throw std::domain_error("operator " + p.str() + " has no real matrix");
    }
    const std::int64_t d = std::int64_t{1} << p.num_qubits;
    const std::int64_t scalar = p.phase == 0 ? 1 : -1;
    IntMatrix m = IntMatrix::Zero(d, d);
    for (std::int64_t col = 0; col < d; col++) {
        std::int64_t row = col ^ p.xs;
        bool negative = std::popcount(static_cast<std::uint32_t>(col) & p.zs) % 2 == 1;
        m(row, col) = negative ? -scalar : scalar;
    }
    return m;
}

std::vector<PauliOperator> closure(std::span<const PauliOperator> ops) {
    if (ops.empty()) {
        return {};
    }
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (!commutes(ops[i], ops[j])) {
                throw std::invalid_argument(ops[i].str() + " and " + ops[j].str() + " do not commute");
            }
        }
    }
    const int n = ops[0].num_qubits;
    std::set<std::pair<std::uint32_t, std::uint32_t>> members;
    std::vector<PauliOperator> frontier;
    for (const auto &op : ops) {
        PauliOperator bare{n, op.xs, op.zs, 0};
        if (members.insert({bare.xs, bare.zs}).second) {
            frontier.push_back(bare);
        }
    }
    std::vector<PauliOperator> all = frontier;
    while (!frontier.empty()) {
        std::vector<PauliOperator> next;
        for (const auto &a : frontier) {
            for (const auto &b : std::vector<PauliOperator>(all)) {
                PauliOperator c{n, a.xs ^ b.xs, a.zs ^ b.zs, 0};
                if (members.insert({c.xs, c.zs}).second) {
                    next.push_back(c);
                    all.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<PauliOperator> out;
    for (const auto &[x, z] : members) {
        if (x != 0 || z != 0) {
            out.push_back(PauliOperator{n, x, z, 0});
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> joint_eigenbasis(std::span<const PauliOperator> ops) {
    if (ops.empty()) {
        throw std::invalid_argument("no operators given");
    }
    const int n = ops[0].num_qubits;
    for (const auto &op : ops) {
        check_same_size(ops[0], op);
        if (!op.is_real()) {
            throw std::invalid_argument("operator " + op.str() + " is not real");
        }
    }
    closure(ops);  // commutation check

    const std::int64_t d = std::int64_t{1} << n;
    std::vector<std::vector<Vec>> spaces(1);
    for (std::int64_t k = 0; k < d; k++) {
        Vec e(d, 0);
        e[k] = 1;
        spaces[0].push_back(std::move(e));
    }
    for (const auto &op : ops) {
        IntMatrix m = matrix(op);
        std::vector<std::vector<Vec>> split;
        for (const auto &space : spaces) {
            for (int sign : {1, -1}) {
                std::vector<Vec> images;
                for (const Vec &v : space) {
                    Vec w(d, 0);
                    bool nonzero = false;
                    for (std::int64_t r = 0; r < d; r++) {
                        std::int64_t acc = v[r];
                        for (std::int64_t c = 0; c < d; c++) {
                            acc += sign * m(r, c) * v[c];
                        }
                        w[r] = acc;
                        nonzero |= acc != 0;
                    }
                    if (nonzero) {
                        make_primitive(w);
                        images.push_back(std::move(w));
                    }
                }
                auto basis = independent_subset(images);
                if (!basis.empty()) {
                    split.push_back(std::move(basis));
                }
            }
        }
        spaces = std::move(split);
    }
    std::vector<std::vector<std::int64_t>> rays;
    for (const auto &space : spaces) {
        if (space.size() != 1) {
            throw DegeneracyError(
                "operators do not form a maximal commuting set: an eigenspace of dimension " +
                std::to_string(space.size()) + " remains");
        }
        rays.push_back(canonical_coords(space[0]));
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

Integer count_max_commuting(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    Integer total = 1;
    for (int i = 1; i <= num_qubits; i++) {
        total *= 1 + (Integer(1) << i);
    }
    return total;
}

Integer count_real_rays(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    Integer total = 1;
    for (int i = 1; i <= num_qubits; i++) {
        total *= 2 + (Integer(1) << i);
    }
    return total;
}

namespace {

MagicConfiguration make_config(std::string label, const std::vector<std::vector<std::string>> &contexts) {
    MagicConfiguration config;
    config.label = std::move(label);
    for (const auto &context : contexts) {
        std::vector<PauliOperator> ops;
        for (const auto &text : context) {
            ops.push_back(PauliOperator::from_text(text));
        }
        config.contexts.push_back(std::move(ops));
    }
    config.num_qubits = config.contexts[0][0].num_qubits;
    return config;
}

}  // namespace

MagicConfiguration magic_configuration(std::string_view label) {
    if (label == "square2q") {
        // Rows, then columns; the last column multiplies to -I.
        return make_config(
            "square2q", {{"ZI", "IZ", "ZZ"},
                         {"IX", "XI", "XX"},
                         {"ZX", "XZ", "YY"},
                         {"ZI", "IX", "ZX"},
                         {"IZ", "XI", "XZ"},
                         {"ZZ", "XX", "YY"}});
    }
    if (label == "pentagram3q") {
        // Four columns, then the row of products.
        return make_config(
            "pentagram3q", {{"ZII", "IZI", "IIZ", "ZZZ"},
                            {"ZII", "IXI", "IIX", "ZXX"},
                            {"XII", "IZI", "IIX", "XZX"},
                            {"XII", "IXI", "IIZ", "XXZ"},
                            {"ZZZ", "ZXX", "XZX", "XXZ"}});
    }
    if (label == "rectangle4q") {
        return make_config(
            "rectangle4q", {{"ZIII", "IXII", "IIZI", "IIIX", "ZXZX"},
                            {"ZIII", "IXII", "IIXI", "IIIZ", "ZXXZ"},
                            {"XIII", "IXII", "IIZI", "IIIZ", "XXZZ"},
                            {"XIII", "IXII", "IIXI", "IIIX", "XXXX"},
                            {"ZXZX", "ZXXZ", "XXZZ", "XXXX"}});
    }
    throw std::invalid_argument("unknown configuration '" + std::string(label) + "'");
}

MagicReport verify_magic(const MagicConfiguration &config) {
    MagicReport report;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> occurrences;
    int negatives = 0;
    for (const auto &context : config.contexts) {
        if (context.empty()) {
            throw std::invalid_argument("empty context");
        }
        PauliOperator product = PauliOperator::identity(context[0].num_qubits);
        for (size_t i = 0; i < context.size(); i++) {
            for (size_t j = i + 1; j < context.size(); j++) {
                if (!commutes(context[i], context[j])) {
                    throw std::invalid_argument(
                        "context operators " + context[i].str() + " and " + context[j].str() + " do not commute");
                }
            }
            product = product * context[i];
            occurrences[{context[i].xs, context[i].zs}]++;
        }
        if (!product.is_scalar() || !product.is_real()) {
            throw std::invalid_argument("context product " + product.str() + " is not +-identity");
        }
        int sign = product.phase == 0 ? 1 : -1;
        negatives += sign < 0;
        report.signs.push_back(sign);
    }
    bool all_even = std::all_of(occurrences.begin(), occurrences.end(), [](const auto &kv) {
        return kv.second % 2 == 0;
    });
    report.parity_obstruction = all_even && negatives % 2 == 1;
    return report;
}

}  // namespace bks
