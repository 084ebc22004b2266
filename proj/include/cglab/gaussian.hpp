#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cglab/error.hpp"
#include "cglab/rational.hpp"

namespace cglab {

// Element of Q(i): a pair of exact rationals.
struct Gaussian {
    Rat re;
    Rat im;

    Gaussian() = default;
    Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Gaussian(const Rat& r) : re(r), im(0) {}

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }

    Gaussian operator+(const Gaussian& o) const { return {Rat(re + o.re), Rat(im + o.im)}; }
    Gaussian operator-(const Gaussian& o) const { return {Rat(re - o.re), Rat(im - o.im)}; }
    Gaussian operator-() const { return {Rat(-re), Rat(-im)}; }
    Gaussian operator*(const Gaussian& o) const {
        return {Rat(re * o.re - im * o.im), Rat(re * o.im + im * o.re)};
    }
    Gaussian operator/(const Gaussian& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw DomainError("division by zero");
        return {Rat((re * o.re + im * o.im) / n), Rat((im * o.re - re * o.im) / n)};
    }

    bool is_zero() const { return re == 0 && im == 0; }
};

// Exact squared modulus; order-isomorphic to the true complex modulus.
inline Rat sq_modulus(const Gaussian& z) { return z.re * z.re + z.im * z.im; }

// Canonical storage order (lexicographic); not a semantic field order.
inline bool canon_less(const Gaussian& a, const Gaussian& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// Grammar: a, bi, a+bi, a-bi with rational a, b; bare i and -i allowed.
inline Gaussian parse_gaussian(std::string_view text) {
    const std::string s = detail::strip_ws(text);
    if (s.empty()) throw ParseError("empty gaussian", 0);
    // Find a top-level sign splitting real and imaginary parts (not at index 0,
    // not right after '/' or another sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            split = i; // rightmost such sign still works: fractions contain no signs inside
        }
    }
    auto parse_imag_coeff = [](std::string_view part) -> Rat {
        // `part` ends with 'i'; the coefficient may be empty or a sign alone.
        std::string coeff(part.substr(0, part.size() - 1));
        if (coeff.empty() || coeff == "+") return Rat(1);
        if (coeff == "-") return Rat(-1);
        return parse_rational(coeff);
    };
    if (split == std::string::npos) {
        if (s.back() == 'i') return {Rat(0), parse_imag_coeff(s)};
        return {parse_rational(s), Rat(0)};
    }
    std::string_view left = std::string_view(s).substr(0, split);
    std::string_view right = std::string_view(s).substr(split);
    if (right.back() != 'i') {
        // No imaginary tail: the sign belonged to a plain rational like "-3/4"? Then
        // split was wrong; treat whole string as real.
        return {parse_rational(s), Rat(0)};
    }
    if (left.back() == 'i') throw ParseError("imaginary part must come last", split);
    return {parse_rational(left), parse_imag_coeff(right)};
}

inline std::string format_gaussian(const Gaussian& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string imag;
    if (z.im == 1)
        imag = "i";
    else if (z.im == -1)
        imag = "-i";
    else
        imag = format_rational(z.im) + "i";
    if (z.re == 0) return imag;
    if (z.im > 0) return format_rational(z.re) + "+" + imag;
    return format_rational(z.re) + imag; // imag already carries '-'
}

} // namespace cglab
