#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cglab/error.hpp"
#include "cglab/fields.hpp"

namespace cglab {

// Canonical finite set: strictly ordered (per-field canonical order),
// deduplicated, single field descriptor. Immutable by convention: every
// operation returns a fresh set.
template <FieldElem F>
class FiniteSet {
public:
    FiniteSet() = default;

    explicit FiniteSet(std::vector<F> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end(),
                  [](const F& a, const F& b) { return canon_less(a, b); });
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        check_descriptor();
    }

    const std::vector<F>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const F& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const F& x) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x,
                                   [](const F& a, const F& b) { return canon_less(a, b); });
        return it != elems_.end() && *it == x;
    }

    FieldDescriptor descriptor() const {
        if (elems_.empty()) return FieldDescriptor{FieldTraits<F>::kind};
        return FieldTraits<F>::descriptor(elems_.front());
    }

private:
    std::vector<F> elems_;

    void check_descriptor() const {
        // Only Laurent carries runtime descriptor state (q, floor).
        if constexpr (FieldTraits<F>::kind == FieldKind::Laurent) {
            for (std::size_t i = 1; i < elems_.size(); ++i)
                if (elems_[i].q() != elems_[0].q())
                    throw FieldMismatchError("set mixes Laurent fields with different q");
        }
    }
};

template <FieldElem F>
FiniteSet<F> make_set(std::vector<F> elems) {
    return FiniteSet<F>(std::move(elems));
}

template <FieldElem F>
FiniteSet<F> set_union(const FiniteSet<F>& a, const FiniteSet<F>& b) {
    std::vector<F> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return FiniteSet<F>(std::move(out));
}

template <FieldElem F>
FiniteSet<F> set_intersect(const FiniteSet<F>& a, const FiniteSet<F>& b) {
    std::vector<F> out;
    for (const F& x : a)
        if (b.contains(x)) out.push_back(x);
    return FiniteSet<F>(std::move(out));
}

template <FieldElem F>
FiniteSet<F> translate(const FiniteSet<F>& a, const F& c) {
    std::vector<F> out;
    out.reserve(a.size());
    for (const F& x : a) out.push_back(x + c);
    return FiniteSet<F>(std::move(out));
}

template <FieldElem F>
FiniteSet<F> dilate(const FiniteSet<F>& a, const F& lambda) {
    if (is_zero(lambda)) throw DomainError("dilate by zero");
    std::vector<F> out;
    out.reserve(a.size());
    for (const F& x : a) out.push_back(x * lambda);
    return FiniteSet<F>(std::move(out));
}

template <FieldElem F>
FiniteSet<F> negate(const FiniteSet<F>& a) {
    std::vector<F> out;
    out.reserve(a.size());
    for (const F& x : a) out.push_back(-x);
    return FiniteSet<F>(std::move(out));
}

} // namespace cglab
