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

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bks {

using Integer = boost::multiprecision::cpp_int;

/// Exact reduced fraction with a positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long long value) : value_(value) {
    }
    Rational(const Integer &numerator, const Integer &denominator);

    Integer numerator() const;
    Integer denominator() const;

    Rational operator+(const Rational &other) const;
    Rational operator-(const Rational &other) const;
    Rational operator*(const Rational &other) const;
    Rational operator/(const Rational &other) const;
    Rational operator-() const;
    Rational &operator+=(const Rational &other);

    bool operator==(const Rational &other) const;
    std::strong_ordering operator<=>(const Rational &other) const;

    /// "p/q", always with an explicit denominator.
    std::string str() const;
    static Rational parse(std::string_view text);

    double to_double() const;

   private:
    explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {
    }
    boost::multiprecision::cpp_rational value_;
};

std::ostream &operator<<(std::ostream &out, const Rational &r);

/// Decimal rendering of sqrt(r) with the given number of places, rounded
/// half-to-even on the exact value. r must be non-negative.
std::string decimal_sqrt(const Rational &r, int places);

}  // namespace bks
