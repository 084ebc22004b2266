#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "cglab/error.hpp"

namespace cglab {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always stored fully reduced with positive denominator
// (maintained by the backend).
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    return Rat(int_pow(rat_num(base), e), int_pow(rat_den(base), e));
}

namespace detail {

inline bool rat_digit(char c) { return c >= '0' && c <= '9'; }

// Parses an optionally signed integer starting at `i`; advances `i`.
inline Int parse_int_at(std::string_view s, std::size_t& i) {
    const std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || !rat_digit(s[i])) throw ParseError("expected digit", i < s.size() ? i : start);
    Int v = 0;
    while (i < s.size() && rat_digit(s[i])) {
        v = v * 10 + (s[i] - '0');
        ++i;
    }
    return neg ? Int(-v) : v;
}

inline std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

} // namespace detail

// Grammar: [-]p[/q]. Whitespace is insignificant.
inline Rat parse_rational(std::string_view text) {
    const std::string s = detail::strip_ws(text);
    std::size_t i = 0;
    Int num = detail::parse_int_at(s, i);
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = detail::parse_int_at(s, i);
        if (den == 0) throw ParseError("zero denominator", i);
        if (den < 0) throw ParseError("denominator must be positive", i);
    }
    if (i != s.size()) throw ParseError("trailing characters in rational", i);
    return Rat(num, den);
}

inline std::string format_rational(const Rat& x) {
    if (is_integer(x)) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

// Deterministic decimal rendering with `digits` significant digits, used for
// ratio columns in reports (no floating point involved).
inline std::string decimal_string(const Rat& x, int digits = 6) {
    if (x == 0) return "0";
    std::string sign = x < 0 ? "-" : "";
    Rat a = rat_abs(x);
    // Scale into [10^(digits-1), 10^digits) and remember the decimal exponent.
    int exp10 = 0;
    const Rat ten(10);
    while (a >= rat_pow(ten, static_cast<unsigned>(digits))) {
        a /= 10;
        ++exp10;
    }
    while (a < rat_pow(ten, static_cast<unsigned>(digits - 1))) {
        a *= 10;
        --exp10;
    }
    // Round half up on the integer part.
    Int scaled = rat_num(a) / rat_den(a);
    Rat rem = a - Rat(scaled);
    if (2 * rem >= 1) ++scaled;
    std::string dig = scaled.str();
    if (static_cast<int>(dig.size()) > digits) { // rounding overflowed a digit
        dig.pop_back();
        ++exp10;
    }
    // Place the decimal point: value = dig * 10^exp10.
    int point = static_cast<int>(dig.size()) + exp10;
    std::string out;
    if (point <= 0) {
        out = "0.";
        out.append(static_cast<std::size_t>(-point), '0');
        out += dig;
    } else if (point >= static_cast<int>(dig.size())) {
        out = dig;
        out.append(static_cast<std::size_t>(point - static_cast<int>(dig.size())), '0');
    } else {
        out = dig.substr(0, static_cast<std::size_t>(point)) + "." + dig.substr(static_cast<std::size_t>(point));
    }
    // Trim trailing zeros after a decimal point.
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign + out;
}

} // namespace cglab
