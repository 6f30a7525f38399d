#pragma once

#include <vector>

#include "dfam/algebra.hpp"
#include "dfam/group.hpp"

namespace dfam {

/**
 * Values on the dual group. Characters are indexed by elements of G itself:
 * index j stands for chi_j(x) = exp(2 pi i sum_k j_k x_k / m_k).
 */
struct Spectrum {
    GroupSpec group;
    std::vector<Complex> values;

    const Complex& operator[](std::size_t j) const { return values[j]; }
    std::size_t size() const noexcept { return values.size(); }
};

/// Real nonnegative spectrum |dft_f|^2.
struct PowerSpectrum {
    GroupSpec group;
    std::vector<double> values;

    double operator[](std::size_t j) const { return values[j]; }
    std::size_t size() const noexcept { return values.size(); }
};

Complex char_eval(const GroupSpec& g, std::size_t j, std::size_t x);
Complex char_eval(const GroupSpec& g, const Element& j, const Element& x);

/// <f, h> = sum_x f(x) conj(h(x)).
Complex inner_product(const ComplexFunction& f, const ComplexFunction& h);

/// Character chi_j as a function on G.
ComplexFunction character_function(const GroupSpec& g, std::size_t j);

/// O(v^2) reference transform straight from the definition.
Spectrum dft_naive(const ComplexFunction& f);
/// Axis-by-axis transform over each cyclic factor, O(v * sum m_k).
Spectrum dft(const ComplexFunction& f);

template <class T>
Spectrum dft(const GFunction<T>& f) {
    return dft(to_complex(f));
}

ComplexFunction idft(const Spectrum& s);

PowerSpectrum psd(const ComplexFunction& f);

template <class T>
PowerSpectrum psd(const GFunction<T>& f) {
    return psd(to_complex(f));
}

/// max_chi |psd_f(chi) - dft(paf_f)(chi)| below tol.
bool wiener_khinchin_check(const ComplexFunction& f, double tol = 1e-8);

/// Largest absolute difference between two spectra on the same group.
double max_abs_diff(const Spectrum& a, const Spectrum& b);

}  // namespace dfam
