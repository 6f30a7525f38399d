#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <type_traits>
#include <vector>

#include "dfam/error.hpp"
#include "dfam/group.hpp"

namespace dfam {

using Complex = std::complex<double>;

template <class T>
constexpr T conj_value(const T& x) {
    if constexpr (std::is_same_v<T, Complex>) {
        return std::conj(x);
    } else {
        return x;
    }
}

/**
 * Element of the group algebra: a sparse coefficient map over group elements.
 *
 * Keys are element indices in lexicographic order; zero coefficients are
 * never stored, so two elements compare equal iff they are equal in the
 * algebra. Use `std::int64_t` coefficients for anything that must be exact.
 */
template <class T>
class AlgebraElement {
public:
    explicit AlgebraElement(GroupSpec g) : group_(std::move(g)) {}

    const GroupSpec& group() const noexcept { return group_; }
    const std::map<std::size_t, T>& terms() const noexcept { return terms_; }

    T coeff(std::size_t index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? T{} : it->second;
    }
    T coeff(const Element& x) const { return coeff(group_.index_of(x)); }

    void add_to(std::size_t index, T value) {
        if (index >= group_.order()) throw DomainError("algebra key outside " + group_.literal());
        T& slot = terms_[index];
        slot += value;
        if (slot == T{}) terms_.erase(index);
    }

    AlgebraElement& operator+=(const AlgebraElement& other) {
        require_same_group(other);
        for (const auto& [k, c] : other.terms_) add_to(k, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& other) {
        require_same_group(other);
        for (const auto& [k, c] : other.terms_) add_to(k, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(T scalar, const AlgebraElement& a) {
        AlgebraElement out(a.group_);
        for (const auto& [k, c] : a.terms_) out.add_to(k, scalar * c);
        return out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }

    void require_same_group(const AlgebraElement& other) const {
        if (!(group_ == other.group_)) {
            throw GroupMismatchError("algebra elements over " + group_.literal() + " and " + other.group_.literal());
        }
    }

private:
    GroupSpec group_;
    std::map<std::size_t, T> terms_;
};

using IntAlgebraElement = AlgebraElement<std::int64_t>;
using ComplexAlgebraElement = AlgebraElement<Complex>;

/// A total function on G, stored densely in enumeration order.
template <class T>
struct GFunction {
    GroupSpec group;
    std::vector<T> values;

    GFunction() = default;
    GFunction(GroupSpec g, std::vector<T> vals) : group(std::move(g)), values(std::move(vals)) {
        if (values.size() != group.order()) throw ShapeError("function length does not match group order");
    }
    explicit GFunction(GroupSpec g) : group(std::move(g)), values(group.order(), T{}) {}

    const T& operator[](std::size_t i) const { return values[i]; }
    T& operator[](std::size_t i) { return values[i]; }
    const T& at(const Element& x) const { return values[group.index_of(x)]; }
    std::size_t size() const noexcept { return values.size(); }
};

using IntFunction = GFunction<std::int64_t>;
using ComplexFunction = GFunction<Complex>;

template <class T>
GFunction<Complex> to_complex(const GFunction<T>& f) {
    std::vector<Complex> vals(f.values.begin(), f.values.end());
    return GFunction<Complex>(f.group, std::move(vals));
}

/// Sum of the listed elements, as an exact algebra element.
IntAlgebraElement embed_subset(const GroupSpec& g, std::span<const Element> subset);
IntAlgebraElement embed_subset(const GroupSpec& g, std::span<const std::size_t> subset);

/// The identity e and the whole group G as algebra elements.
IntAlgebraElement unit_element(const GroupSpec& g);
IntAlgebraElement group_sum(const GroupSpec& g);

// Naive product over pairs of supports.
template <class T>
AlgebraElement<T> multiply(const AlgebraElement<T>& a, const AlgebraElement<T>& b) {
    a.require_same_group(b);
    const GroupSpec& g = a.group();
    std::vector<T> acc(g.order(), T{});
    for (const auto& [x, cx] : a.terms()) {
        for (const auto& [y, cy] : b.terms()) acc[g.add(x, y)] += cx * cy;
    }
    AlgebraElement<T> out(g);
    for (std::size_t z = 0; z < acc.size(); ++z) {
        if (acc[z] != T{}) out.add_to(z, acc[z]);
    }
    return out;
}

template <class T>
AlgebraElement<T> involve(const AlgebraElement<T>& a) {
    AlgebraElement<T> out(a.group());
    for (const auto& [x, c] : a.terms()) out.add_to(a.group().negate(x), conj_value(c));
    return out;
}

template <class T>
AlgebraElement<T> norm(const AlgebraElement<T>& a) {
    return multiply(a, involve(a));
}

template <class T>
T augmentation(const AlgebraElement<T>& a) {
    T s{};
    for (const auto& [x, c] : a.terms()) s += c;
    return s;
}

/// Periodic autocorrelation at one point: sum_y f(x+y) conj(f(y)).
template <class T>
T paf(const GFunction<T>& f, std::size_t x) {
    const GroupSpec& g = f.group;
    T s{};
    for (std::size_t y = 0; y < g.order(); ++y) s += f[g.add(x, y)] * conj_value(f[y]);
    return s;
}

template <class T>
T paf(const GFunction<T>& f, const Element& x) {
    return paf(f, f.group.index_of(x));
}

template <class T>
GFunction<T> paf_function(const GFunction<T>& f) {
    GFunction<T> out(f.group);
    for (std::size_t x = 0; x < f.group.order(); ++x) out[x] = paf(f, x);
    return out;
}

/// a_f = sum_x f(x) x.
template <class T>
AlgebraElement<T> algebra_of_function(const GFunction<T>& f) {
    AlgebraElement<T> out(f.group);
    for (std::size_t x = 0; x < f.group.order(); ++x) {
        if (f[x] != T{}) out.add_to(x, f[x]);
    }
    return out;
}

template <class T>
GFunction<T> function_of_algebra(const AlgebraElement<T>& a) {
    GFunction<T> out(a.group());
    for (const auto& [x, c] : a.terms()) out[x] = c;
    return out;
}

/// Convolution (f*h)(x) = sum_y f(y) h(x-y).
template <class T>
GFunction<T> convolve(const GFunction<T>& f, const GFunction<T>& h) {
    if (!(f.group == h.group)) throw GroupMismatchError("convolution of functions on different groups");
    const GroupSpec& g = f.group;
    GFunction<T> out(g);
    for (std::size_t y = 0; y < g.order(); ++y) {
        if (f[y] == T{}) continue;
        for (std::size_t z = 0; z < g.order(); ++z) out[g.add(y, z)] += f[y] * h[z];
    }
    return out;
}

}  // namespace dfam
