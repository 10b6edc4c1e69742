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

#include "bks/rational.h"

#include <ostream>
#include <stdexcept>

namespace bks {

using boost::multiprecision::cpp_rational;

Rational::Rational(const Integer &numerator, const Integer &denominator) {
    if (denominator == 0) {
        throw std::domain_error("zero denominator");
    }
    value_ = cpp_rational(numerator);
    value_ /= cpp_rational(denominator);
}

Integer Rational::numerator() const {
    return boost::multiprecision::numerator(value_);
}

Integer Rational::denominator() const {
    return boost::multiprecision::denominator(value_);
}

Rational Rational::operator+(const Rational &other) const {
    return Rational(cpp_rational(value_ + other.value_));
}

Rational Rational::operator-(const Rational &other) const {
    return Rational(cpp_rational(value_ - other.value_));
}

Rational Rational::operator*(const Rational &other) const {
    return Rational(cpp_rational(value_ * other.value_));
}

Rational Rational::operator/(const Rational &other) const {
    if (other.value_ == 0) {
        throw std::domain_error("division by zero");
    }
    return Rational(cpp_rational(value_ / other.value_));
}

Rational Rational::operator-() const {
    return Rational(cpp_rational(-value_));
}

Rational &Rational::operator+=(const Rational &other) {
    value_ += other.value_;
    return *this;
}

bool Rational::operator==(const Rational &other) const {
    return value_ == other.value_;
}

std::strong_ordering Rational::operator<=>(const Rational &other) const {
    if (value_ < other.value_) {
        return std::strong_ordering::less;
    }
    if (value_ > other.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("bad rational: " + std::string(text));
        }
        size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("bad rational: " + std::string(text));
        }
        for (size_t k = start; k < s.size(); k++) {
            if (s[k] < '0' || s[k] > '9') {
                throw std::invalid_argument("bad rational: " + std::string(text));
            }
        }
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text), 1);
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

double Rational::to_double() const {
    return value_.convert_to<double>();
}

std::ostream &operator<<(std::ostream &out, const Rational &r) {
    return out << r.str();
}

std::string decimal_sqrt(const Rational &r, int places) {
    if (r < Rational(0)) {
        throw std::domain_error("square root of a negative rational");
    }
    Integer scale = boost::multiprecision::pow(Integer(10), 2 * (places + 1));
    // floor(sqrt(r) * 10^(places+1)), then round the extra digit.
    Integer scaled = r.numerator() * scale / r.denominator();
    Integer root = boost::multiprecision::sqrt(scaled);
    bool exact = root * root * r.denominator() == r.numerator() * scale;
    Integer kept = root / 10;
    int digit = static_cast<int>(root % 10);
    if (digit > 5 || (digit == 5 && (!exact || kept % 2 == 1))) {
        kept += 1;
    }
    std::string digits = kept.str();
    if (places == 0) {
        return digits;
    }
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
    return digits;
}

}  // namespace bks
