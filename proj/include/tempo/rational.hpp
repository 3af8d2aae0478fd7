#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <string_view>

#include "tempo/errors.hpp"

namespace tempo {

// Edge costs are exact rationals. Domination needs exact <=/< decisions, so
// nothing in the library ever compares costs through floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a nonnegative decimal literal such as "3", "2.5" or "0.125".
inline Rational parse_decimal(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw ParseError("not a nonnegative decimal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    const std::size_t dot = text.find('.');
    const std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() || (dot != std::string_view::npos && frac_part.empty())) return fail();
    BigInt numerator = 0;
    for (std::string_view part : {int_part, frac_part}) {
        for (char c : part) {
            if (c < '0' || c > '9') return fail();
            numerator = numerator * 10 + (c - '0');
        }
    }
    BigInt denominator = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) denominator *= 10;
    return Rational(numerator, denominator);
}

// Exact textual form: an integer or terminating decimal whenever the reduced
// denominator is 2^a*5^b (always true for sums of parsed decimals), otherwise
// "p/q".
inline std::string format_rational(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    BigInt rest = den;
    int twos = 0;
    int fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();
    const int digits = std::max(twos, fives);
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * (scale / den);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string text = scaled.str();
    if (text.size() <= static_cast<std::size_t>(digits))
        text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
    return negative ? "-" + text : text;
}

}  // namespace tempo
