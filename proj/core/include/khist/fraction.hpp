/*
 * Copyright 2026 The khist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "khist/errors.hpp"

namespace khist {

/// Exact rational number with a positive denominator, always stored reduced.
///
/// Scores and accuracies in this library are small integer counts divided by
/// member counts; comparisons must not go through floating point, because the
/// clustering loop is order-dependent and float ties would make runs
/// irreproducible. Intermediates use 128-bit arithmetic; a result whose
/// reduced form does not fit in int64 throws OverflowError.
class Fraction {
public:
    constexpr Fraction() = default;

    Fraction(std::int64_t numerator, std::int64_t denominator = 1)
        : num_(numerator), den_(denominator) {
        if (den_ == 0) throw UsageError("Fraction: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }

    /// Canonical text form: "3/4", or just "3" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "3", "-2/7" or "0.25" exactly. Decimal strings keep at most
    /// 18 fractional digits so the power-of-ten denominator fits in int64.
    static Fraction parse(std::string_view text);

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(num, den);
    }

    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        __int128 num = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(num, den);
    }

    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }

private:
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    static Fraction from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace khist
