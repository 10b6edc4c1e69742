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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bks/metric.h"
#include "bks/proofs.h"

namespace bks {

class SearchFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SearchParams {
    /// Random draws spent looking for bases that partition the rays.
    std::uint64_t budget = 1'000'000;
    /// Independent grow-and-minimize attempts; the smallest set wins.
    int attempts = 64;
    /// Give up on an attempt once the grown set reaches this many bases.
    int max_bases = 120;
};

struct SearchResult {
    std::uint64_t seed = 0;
    /// Minimal set satisfying all three selection criteria: every distance
    /// class present, five members partitioning the rays, non-colorable.
    ProofSet selected;
    /// Positions (basis ids) of the partitioning members.
    std::vector<int> partition;
    /// selected reduced further by deletions that only keep non-colorability.
    ProofSet shrunk;
    /// l after each accepted deletion of the final shrink.
    std::vector<int> shrink_trace;
    std::uint64_t draws = 0;
    int attempts_used = 0;
};

/// Randomized search over the 4-qubit basis system. inc must hold the 625
/// bases of catalog_paper(4) and table the distances between them.
/// Deterministic for a fixed seed. Throws SearchFailure when no attempt
/// succeeds within the budget.
SearchResult search_4q(
    const IncidenceStructure &inc, const DistanceTable &table, std::uint64_t seed, const SearchParams &params = {});

/// Deletes bases one at a time, visiting them in a random order each pass,
/// while the remaining set stays non-colorable. Returns the surviving basis
/// ids; trace gets the size after each deletion.
std::vector<int> greedy_shrink(
    const IncidenceStructure &inc, std::vector<int> basis_ids, std::mt19937_64 &rng, std::vector<int> *trace = nullptr);

/// Uniform integer in [0, n) from raw engine output, identical on every
/// platform for a given engine state.
std::uint64_t uniform_index(std::mt19937_64 &rng, std::uint64_t n);

}  // namespace bks
