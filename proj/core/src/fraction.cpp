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
#include "khist/fraction.hpp"

#include <cctype>
#include <limits>

namespace khist {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int(std::string_view text, std::string_view original) {
    if (text.empty()) throw UsageError("Fraction: cannot parse '" + std::string(original) + "'");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
        if (text.size() == 1) throw UsageError("Fraction: cannot parse '" + std::string(original) + "'");
    }
    std::int64_t value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw UsageError("Fraction: cannot parse '" + std::string(original) + "'");
        }
        if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
            throw OverflowError("Fraction: '" + std::string(original) + "' out of range");
        }
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? -value : value;
}

}  // namespace

Fraction Fraction::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw UsageError("Fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Fraction();
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr __int128 max64 = std::numeric_limits<std::int64_t>::max();
    constexpr __int128 min64 = std::numeric_limits<std::int64_t>::min();
    if (num > max64 || num < min64 || den > max64) {
        throw OverflowError("Fraction: exact result exceeds 64-bit range");
    }
    Fraction out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
}

Fraction Fraction::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash), text);
        std::int64_t den = parse_int(text.substr(slash + 1), text);
        return Fraction(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 18) throw UsageError("Fraction: too many decimal digits in '" + std::string(text) + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        std::int64_t whole_value = whole.empty() || whole == "-" || whole == "+"
                                       ? 0
                                       : parse_int(whole, text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t frac_value = frac.empty() ? 0 : parse_int(frac, text);
        __int128 num = static_cast<__int128>(whole_value < 0 ? -whole_value : whole_value) * den + frac_value;
        if (negative || whole_value < 0) num = -num;
        return from_wide(num, den);
    }
    return Fraction(parse_int(text, text));
}

}  // namespace khist
