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

#include "bks/gf2.h"

#include <stdexcept>

namespace bks {

namespace {

/// Reduced row echelon form in place; returns pivot column of each kept row.
std::vector<size_t> reduce(std::vector<Bits> &rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t pick = rank;
        while (pick < rows.size() && !rows[pick].test(c)) {
            pick++;
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pick]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].test(c)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(c);
        rank++;
    }
    rows.resize(rank);
    return pivots;
}

}  // namespace

BitMatrix::BitMatrix(std::vector<Bits> rows) : rows_(std::move(rows)), cols_(rows_.empty() ? 0 : rows_[0].size()) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged bit matrix");
        }
    }
}

Bits BitMatrix::apply(const Bits &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("vector length does not match column count");
    }
    Bits out(rows());
    for (size_t r = 0; r < rows(); r++) {
        out.set(r, (rows_[r] & x).count() % 2 == 1);
    }
    return out;
}

size_t gf2_rank(const BitMatrix &m) {
    std::vector<Bits> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    return reduce(rows, m.cols()).size();
}

std::vector<Bits> gf2_kernel(const BitMatrix &m) {
    std::vector<Bits> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    std::vector<size_t> pivots = reduce(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Bits> kernel;
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        Bits v(m.cols());
        v.set(free);
        for (size_t k = 0; k < rows.size(); k++) {
            if (rows[k].test(free)) {
                v.set(pivots[k]);
            }
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool in_row_space(const BitMatrix &m, const Bits &v) {
    std::vector<Bits> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    size_t rank = reduce(rows, m.cols()).size();
    rows.push_back(v);
    return reduce(rows, m.cols()).size() == rank;
}

}  // namespace bks
