#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cglab/error.hpp"
#include "cglab/gaussian.hpp"
#include "cglab/laurent.hpp"
#include "cglab/rational.hpp"

namespace cglab {

enum class FieldKind { Rational, GaussianRational, Laurent };

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t q = 0;                          // Laurent only
    int trunc_floor = Laurent::kDefaultTruncFloor; // Laurent only

    bool operator==(const FieldDescriptor&) const = default;
};

inline std::string field_name(const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldKind::Rational: return "rational";
        case FieldKind::GaussianRational: return "gaussian";
        case FieldKind::Laurent: return "laurent q=" + std::to_string(d.q);
    }
    return "?";
}

// Header-line grammar: rational | gaussian | laurent q=<p>
inline FieldDescriptor parse_field_descriptor(std::string_view text) {
    const std::string s = detail::strip_ws(text);
    if (s == "rational") return {FieldKind::Rational};
    if (s == "gaussian") return {FieldKind::GaussianRational};
    if (s.rfind("laurentq=", 0) == 0) {
        std::size_t i = 9;
        Int q = detail::parse_int_at(s, i);
        if (i != s.size() || q < 2 || q > 1000000) throw ParseError("bad laurent modulus", i);
        FieldDescriptor d{FieldKind::Laurent};
        d.q = static_cast<std::uint32_t>(q);
        if (!detail::is_prime_u32(d.q)) throw ParseError("laurent modulus must be prime", 9);
        return d;
    }
    throw ParseError("unknown field: " + s, 0);
}

// --- norm keys ---------------------------------------------------------

inline Rat norm_key(const Rat& x) { return rat_abs(x); }
inline Rat norm_key(const Gaussian& z) { return sq_modulus(z); }
inline DegKey norm_key(const Laurent& x) { return x.degree_key(); }

template <class F>
using NormOf = decltype(norm_key(std::declval<const F&>()));

template <class F>
inline bool ball_contains(const F& center, const NormOf<F>& radius, const F& x) {
    return norm_key(F(x - center)) <= radius;
}

// --- per-type traits used by generic set machinery ---------------------

inline bool canon_less(const Rat& a, const Rat& b) { return a < b; }

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline bool is_zero(const Laurent& x) { return x.is_zero(); }

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
    static constexpr FieldKind kind = FieldKind::Rational;
    static constexpr bool ultrametric = false;
    static constexpr bool ordered = true; // canonical order is the field order
    static FieldDescriptor descriptor(const Rat&) { return {FieldKind::Rational}; }
    static Rat parse(std::string_view s, const FieldDescriptor&) { return parse_rational(s); }
    static std::string format(const Rat& x) { return format_rational(x); }
    static std::string format_norm(const Rat& n) { return format_rational(n); }
};

template <>
struct FieldTraits<Gaussian> {
    static constexpr FieldKind kind = FieldKind::GaussianRational;
    static constexpr bool ultrametric = false;
    static constexpr bool ordered = false;
    static FieldDescriptor descriptor(const Gaussian&) { return {FieldKind::GaussianRational}; }
    static Gaussian parse(std::string_view s, const FieldDescriptor&) { return parse_gaussian(s); }
    static std::string format(const Gaussian& z) { return format_gaussian(z); }
    static std::string format_norm(const Rat& n) { return format_rational(n); }
};

template <>
struct FieldTraits<Laurent> {
    static constexpr FieldKind kind = FieldKind::Laurent;
    static constexpr bool ultrametric = true;
    static constexpr bool ordered = false;
    static FieldDescriptor descriptor(const Laurent& x) {
        return {FieldKind::Laurent, x.q(), x.trunc_floor()};
    }
    static Laurent parse(std::string_view s, const FieldDescriptor& d) {
        return parse_laurent(s, d.q, d.trunc_floor);
    }
    static std::string format(const Laurent& x) { return format_laurent(x); }
    static std::string format_norm(const DegKey& n) { return format_deg_key(n); }
};

template <class F>
concept FieldElem = requires(const F& a, const F& b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a* b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { canon_less(a, b) } -> std::same_as<bool>;
    { is_zero(a) } -> std::same_as<bool>;
    norm_key(a);
    FieldTraits<F>::kind;
};

} // namespace cglab
