#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cglab/error.hpp"
#include "cglab/rational.hpp"

namespace cglab {

// Norm key for F_q((t^-1)): the degree, with a distinguished bottom for zero
// (||x|| = q^deg x, and ||0|| = 0 sits below every power of q).
struct DegKey {
    bool bottom = true;
    int deg = 0;

    static DegKey of(int d) { return {false, d}; }
    static DegKey zero() { return {true, 0}; }

    friend bool operator==(const DegKey& a, const DegKey& b) {
        return a.bottom == b.bottom && (a.bottom || a.deg == b.deg);
    }
    friend std::strong_ordering operator<=>(const DegKey& a, const DegKey& b) {
        if (a.bottom || b.bottom) return (!a.bottom) <=> (!b.bottom);
        return a.deg <=> b.deg;
    }
};

inline std::string format_deg_key(const DegKey& k) {
    return k.bottom ? std::string("bottom") : std::to_string(k.deg);
}

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q) {
    // Fermat: a^(q-2) mod q, q prime.
    std::uint64_t r = 1, b = a % q;
    std::uint32_t e = q - 2;
    while (e) {
        if (e & 1u) r = r * b % q;
        b = b * b % q;
        e >>= 1u;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace detail

// Finite-support Laurent polynomial over F_q, an element of F_q((t^-1)).
// Terms are stored sorted by ascending exponent with no zero coefficients;
// the zero element has an empty term list. Division truncates below
// trunc_floor and reports exactness.
class Laurent {
public:
    using Term = std::pair<int, std::uint32_t>; // (exponent, coefficient in [1, q-1])

    static constexpr int kDefaultTruncFloor = -64;

    Laurent() = default;

    explicit Laurent(std::uint32_t q, int trunc_floor = kDefaultTruncFloor)
        : q_(q), floor_(trunc_floor) {
        check_descriptor();
    }

    Laurent(std::uint32_t q, std::vector<Term> terms, int trunc_floor = kDefaultTruncFloor)
        : q_(q), floor_(trunc_floor), terms_(std::move(terms)) {
        check_descriptor();
        normalize();
    }

    static Laurent constant(std::uint32_t q, std::uint32_t c, int trunc_floor = kDefaultTruncFloor) {
        return Laurent(q, {{0, c}}, trunc_floor);
    }
    static Laurent monomial(std::uint32_t q, int e, std::uint32_t c = 1,
                            int trunc_floor = kDefaultTruncFloor) {
        return Laurent(q, {{e, c}}, trunc_floor);
    }

    std::uint32_t q() const { return q_; }
    int trunc_floor() const { return floor_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DegKey degree_key() const {
        if (terms_.empty()) return DegKey::zero();
        return DegKey::of(terms_.back().first);
    }

    bool operator==(const Laurent& o) const { return q_ == o.q_ && terms_ == o.terms_; }

    Laurent operator+(const Laurent& o) const { return add_scaled(o, 1); }
    Laurent operator-(const Laurent& o) const { return add_scaled(o, q_ - 1); }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.terms_) c = q_ - c;
        return r;
    }

    Laurent operator*(const Laurent& o) const {
        require_same_field(o);
        std::vector<Term> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                acc.emplace_back(e1 + e2, static_cast<std::uint32_t>(
                                              static_cast<std::uint64_t>(c1) * c2 % q_));
        return Laurent(q_, std::move(acc), floor_);
    }

    // Long division cancelling leading terms, truncated below trunc_floor.
    // Second component: true iff the remainder vanished (exact quotient).
    std::pair<Laurent, bool> divide(const Laurent& o) const {
        require_same_field(o);
        if (o.is_zero()) throw DomainError("division by zero");
        Laurent rem = *this;
        std::vector<Term> quot;
        const int lead_e = o.terms_.back().first;
        const std::uint32_t lead_inv = detail::mod_inverse(o.terms_.back().second, q_);
        while (!rem.is_zero() && rem.terms_.back().first - lead_e >= floor_) {
            const int e = rem.terms_.back().first - lead_e;
            const std::uint32_t c = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(rem.terms_.back().second) * lead_inv % q_);
            quot.emplace_back(e, c);
            rem = rem - Laurent(q_, {{e, c}}, floor_) * o;
        }
        return {Laurent(q_, std::move(quot), floor_), rem.is_zero()};
    }

    // Exact division; throws if the quotient has terms below trunc_floor.
    Laurent operator/(const Laurent& o) const {
        auto [quo, exact] = divide(o);
        if (!exact) throw DomainError("inexact Laurent division (quotient truncated at floor)");
        return quo;
    }

private:
    std::uint32_t q_ = 2;
    int floor_ = kDefaultTruncFloor;
    std::vector<Term> terms_; // ascending exponent, coefficients in [1, q-1]

    void check_descriptor() const {
        if (!detail::is_prime_u32(q_)) throw DomainError("Laurent modulus q must be prime");
        if (floor_ > 0) throw DomainError("truncation floor must be <= 0");
    }

    void require_same_field(const Laurent& o) const {
        if (q_ != o.q_) throw FieldMismatchError("Laurent operands have different q");
    }

    Laurent add_scaled(const Laurent& o, std::uint32_t scale) const {
        require_same_field(o);
        std::vector<Term> acc = terms_;
        acc.reserve(acc.size() + o.terms_.size());
        for (const auto& [e, c] : o.terms_)
            acc.emplace_back(e, static_cast<std::uint32_t>(
                                    static_cast<std::uint64_t>(c) * scale % q_));
        return Laurent(q_, std::move(acc), floor_);
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            const std::uint32_t cc = c % q_;
            if (!out.empty() && out.back().first == e) {
                out.back().second = (out.back().second + cc) % q_;
                if (out.back().second == 0) out.pop_back();
            } else if (cc != 0) {
                out.emplace_back(e, cc);
            }
        }
        terms_ = std::move(out);
    }
};

// Canonical storage order: compare leading terms downward; zero is least.
inline bool canon_less(const Laurent& a, const Laurent& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto ia = ta.rbegin();
    auto ib = tb.rbegin();
    for (; ia != ta.rend() && ib != tb.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == ta.rend() && ib != tb.rend();
}

// Grammar: sum of terms c*t^e | c | t^e | t^-e (bare t means t^1);
// coefficients are reduced mod q, whitespace insignificant.
inline Laurent parse_laurent(std::string_view text, std::uint32_t q,
                             int trunc_floor = Laurent::kDefaultTruncFloor) {
    const std::string s = detail::strip_ws(text);
    if (s.empty()) throw ParseError("empty laurent element", 0);
    std::vector<Laurent::Term> terms;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;
        Int coeff = 1;
        bool saw_coeff = false;
        if (i < s.size() && detail::rat_digit(s[i])) {
            coeff = detail::parse_int_at(s, i);
            saw_coeff = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        int expo = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                Int e = detail::parse_int_at(s, i);
                if (e < -100000 || e > 100000) throw ParseError("exponent out of range", i);
                expo = static_cast<int>(e);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected coefficient or 't'", i);
        }
        Int c = coeff * sign;
        Int cm = c % q;
        if (cm < 0) cm += q;
        terms.emplace_back(expo, static_cast<std::uint32_t>(cm));
    }
    return Laurent(q, std::move(terms), trunc_floor);
}

inline std::string format_laurent(const Laurent& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const auto& ts = x.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += "+";
        if (e == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace cglab
