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

#pragma once

#include <vector>

#include "bks/graph.h"

namespace bks {

/// Dense matrix over GF(2), one bitset per row.
class BitMatrix {
   public:
    BitMatrix(size_t rows, size_t cols) : rows_(rows, Bits(cols)), cols_(cols) {
    }
    explicit BitMatrix(std::vector<Bits> rows);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].test(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    const Bits &row(size_t r) const {
        return rows_[r];
    }

    /// M x over GF(2).
    Bits apply(const Bits &x) const;

   private:
    std::vector<Bits> rows_;
    size_t cols_;
};

size_t gf2_rank(const BitMatrix &m);

/// Basis of { x : M x = 0 }, one generator per free column, in increasing
/// order of that column.
std::vector<Bits> gf2_kernel(const BitMatrix &m);

/// True iff v lies in the row space of m.
bool in_row_space(const BitMatrix &m, const Bits &v);

}  // namespace bks
