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

#include <span>
#include <stdexcept>
#include <vector>

#include "bks/ray.h"

namespace bks {

/// Squared inter-basis distance
///   D^2 = 1 - 1/(d-1) * sum_{i,j} (|<a_i|b_j>|^2 - 1/d)^2
/// computed exactly. Throws std::invalid_argument if the bases do not both
/// have catalog.dimension() rays.
Rational distance_sq(const Basis &a, const Basis &b, const RayCatalog &catalog);

class SpectrumError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Distinct squared distances a_1 < a_2 < ... < a_k.
struct DistanceSpectrum {
    std::vector<Rational> classes;

    size_t size() const {
        return classes.size();
    }
    /// 1-based label of value; throws SpectrumError if absent.
    int label_of(const Rational &value) const;
};

DistanceSpectrum spectrum(std::span<const Basis> bases, const RayCatalog &catalog);

/// Pair counts per spectrum class, index k holding label k+1.
using Histogram = std::vector<long>;

Histogram histogram(std::span<const Basis> bases, const DistanceSpectrum &spec, const RayCatalog &catalog);

struct OverlapClass {
    size_t shared = 0;
    int label = 0;
};

OverlapClass overlap_to_distance(
    const Basis &a, const Basis &b, const DistanceSpectrum &spec, const RayCatalog &catalog);

/// Squared distances between all pairs of a fixed basis list, stored as
/// spectrum labels. Building it also fixes the spectrum of the list.
class DistanceTable {
   public:
    DistanceTable(std::span<const Basis> bases, const RayCatalog &catalog);

    const DistanceSpectrum &spectrum() const {
        return spectrum_;
    }
    size_t size() const {
        return n_;
    }
    /// Label (1-based) of the pair; 0 on the diagonal.
    int label(size_t i, size_t j) const {
        return labels_[i * n_ + j];
    }
    const Rational &value(size_t i, size_t j) const;
    /// Histogram over a subset of positions into the basis list.
    Histogram histogram(std::span<const int> positions) const;

   private:
    size_t n_;
    DistanceSpectrum spectrum_;
    std::vector<std::uint8_t> labels_;
};

}  // namespace bks
