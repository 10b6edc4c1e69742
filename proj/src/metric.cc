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

#include "bks/metric.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace bks {

namespace {

using Wide = __int128;

Rational from_wide(Wide num, Wide den) {
    auto to_integer = [](Wide v) {
        bool negative = v < 0;
        unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        Integer out = static_cast<std::uint64_t>(u >> 64);
        out <<= 64;
        out += static_cast<std::uint64_t>(u);
        return negative ? Integer(-out) : out;
    };
    return Rational(to_integer(num), to_integer(den));
}

Rational distance_sq_slow(const Basis &a, const Basis &b, const RayCatalog &catalog) {
    const int d = catalog.dimension();
    Rational inv_d(1, d);
    Rational sum;
    for (int i : a.ray_ids) {
        for (int j : b.ray_ids) {
            Rational t = overlap_sq(catalog.ray(i), catalog.ray(j)) - inv_d;
            sum += t * t;
        }
    }
    return Rational(1) - sum / Rational(d - 1);
}

/// Reduced fraction from the integer path, or nullopt when the norms are too
/// large for 128-bit accumulation.
std::optional<std::pair<Wide, Wide>> distance_sq_wide(const Basis &a, const Basis &b, const RayCatalog &catalog) {
    const Coord d = catalog.dimension();
    if (static_cast<Coord>(a.size()) != d || static_cast<Coord>(b.size()) != d) {
        throw std::invalid_argument("distance needs two bases of " + std::to_string(d) + " rays");
    }
    // Exact integer evaluation over the common denominator d^2 A^2 B^2, where
    // A and B are the lcms of the squared norms in each basis.
    Coord norm_a[64];
    Coord norm_b[64];
    if (d > 64) {
        return std::nullopt;
    }
    Coord lcm_a = 1;
    Coord lcm_b = 1;
    constexpr Coord kLimit = Coord{1} << 20;
    for (Coord i = 0; i < d; i++) {
        const Ray &r = catalog.ray(a.ray_ids[i]);
        norm_a[i] = inner(r, r);
        lcm_a = std::lcm(lcm_a, norm_a[i]);
        const Ray &s = catalog.ray(b.ray_ids[i]);
        norm_b[i] = inner(s, s);
        lcm_b = std::lcm(lcm_b, norm_b[i]);
        if (lcm_a > kLimit || lcm_b > kLimit) {
            return std::nullopt;
        }
    }
    Wide total = 0;
    for (Coord i = 0; i < d; i++) {
        const Ray &ri = catalog.ray(a.ray_ids[i]);
        for (Coord j = 0; j < d; j++) {
            Wide dot = inner(ri, catalog.ray(b.ray_ids[j]));
            Wide t = (d * dot * dot - Wide(norm_a[i]) * norm_b[j]) * (lcm_a / norm_a[i]) * (lcm_b / norm_b[j]);
            total += t * t;
        }
    }
    Wide den = Wide(d - 1) * d * d * lcm_a * lcm_a * lcm_b * lcm_b;
    Wide num = den - total;
    Wide x = num < 0 ? -num : num;
    Wide y = den;
    while (y != 0) {
        Wide t = x % y;
        x = y;
        y = t;
    }
    if (x > 1) {
        num /= x;
        den /= x;
    }
    return std::make_pair(num, den);
}

}  // namespace

Rational distance_sq(const Basis &a, const Basis &b, const RayCatalog &catalog) {
    auto wide = distance_sq_wide(a, b, catalog);
    if (!wide) {
        return distance_sq_slow(a, b, catalog);
    }
    return from_wide(wide->first, wide->second);
}

int DistanceSpectrum::label_of(const Rational &value) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), value);
    if (it == classes.end() || *it != value) {
        throw SpectrumError("squared distance " + value.str() + " is not in the spectrum");
    }
    return static_cast<int>(it - classes.begin()) + 1;
}

DistanceSpectrum spectrum(std::span<const Basis> bases, const RayCatalog &catalog) {
    std::vector<Rational> values;
    for (size_t i = 0; i < bases.size(); i++) {
        for (size_t j = i + 1; j < bases.size(); j++) {
            values.push_back(distance_sq(bases[i], bases[j], catalog));
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return DistanceSpectrum{std::move(values)};
}

Histogram histogram(std::span<const Basis> bases, const DistanceSpectrum &spec, const RayCatalog &catalog) {
    Histogram counts(spec.size(), 0);
    for (size_t i = 0; i < bases.size(); i++) {
        for (size_t j = i + 1; j < bases.size(); j++) {
            counts[spec.label_of(distance_sq(bases[i], bases[j], catalog)) - 1]++;
        }
    }
    return counts;
}

OverlapClass overlap_to_distance(
    const Basis &a, const Basis &b, const DistanceSpectrum &spec, const RayCatalog &catalog) {
    return OverlapClass{shared_rays(a, b), spec.label_of(distance_sq(a, b, catalog))};
}

DistanceTable::DistanceTable(std::span<const Basis> bases, const RayCatalog &catalog)
    : n_(bases.size()), labels_(bases.size() * bases.size(), 0) {
    // Values are interned as they appear; labels are assigned once the
    // distinct values can be sorted.
    std::vector<Rational> distinct;
    std::map<std::pair<Wide, Wide>, int> seen_wide;
    std::vector<int> slots;
    slots.reserve(n_ * (n_ - (n_ > 0)) / 2);
    auto intern = [&](const Rational &value) {
        auto it = std::find(distinct.begin(), distinct.end(), value);
        if (it != distinct.end()) {
            return static_cast<int>(it - distinct.begin());
        }
        distinct.push_back(value);
        if (distinct.size() > 255) {
            throw std::length_error("too many distance classes");
        }
        return static_cast<int>(distinct.size()) - 1;
    };
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            auto wide = distance_sq_wide(bases[i], bases[j], catalog);
            if (!wide) {
                slots.push_back(intern(distance_sq_slow(bases[i], bases[j], catalog)));
                continue;
            }
            auto it = seen_wide.find(*wide);
            if (it == seen_wide.end()) {
                it = seen_wide.emplace(*wide, intern(from_wide(wide->first, wide->second))).first;
            }
            slots.push_back(it->second);
        }
    }
    std::vector<Rational> sorted = distinct;
    std::sort(sorted.begin(), sorted.end());
    spectrum_ = DistanceSpectrum{std::move(sorted)};
    std::vector<std::uint8_t> relabel;
    for (const Rational &value : distinct) {
        relabel.push_back(static_cast<std::uint8_t>(spectrum_.label_of(value)));
    }
    size_t k = 0;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            std::uint8_t label = relabel[slots[k++]];
            labels_[i * n_ + j] = label;
            labels_[j * n_ + i] = label;
        }
    }
}

const Rational &DistanceTable::value(size_t i, size_t j) const {
    if (i == j) {
        static const Rational kZero;
        return kZero;
    }
    return spectrum_.classes[label(i, j) - 1];
}

Histogram DistanceTable::histogram(std::span<const int> positions) const {
    Histogram counts(spectrum_.size(), 0);
    for (size_t i = 0; i < positions.size(); i++) {
        for (size_t j = i + 1; j < positions.size(); j++) {
            int l = label(positions[i], positions[j]);
            if (l == 0) {
                throw std::invalid_argument("histogram over a repeated basis");
            }
            counts[l - 1]++;
        }
    }
    return counts;
}

}  // namespace bks
