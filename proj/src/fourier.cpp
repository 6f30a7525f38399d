#include "dfam/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dfam {

namespace {

// exp(2 pi i num/den) with the phase reduced exactly before scaling.
Complex root_of_unity(long long num, long long den) {
    num %= den;
    if (num < 0) num += den;
    // Quarter turns exactly, so real characters stay real.
    if ((4 * num) % den == 0) {
        static constexpr Complex quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return quarter[4 * num / den];
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

// In-place transform along every axis; sign = -1 forward, +1 inverse.
void transform_axes(const GroupSpec& g, std::vector<Complex>& data, int sign) {
    const std::size_t v = g.order();
    std::size_t stride = v;
    std::vector<Complex> line, out;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        const auto m = static_cast<std::size_t>(g.orders()[k]);
        stride /= m;
        if (m == 1) continue;
        std::vector<Complex> twiddle(m);
        for (std::size_t t = 0; t < m; ++t) twiddle[t] = root_of_unity(sign * static_cast<long long>(t), static_cast<long long>(m));
        line.resize(m);
        out.resize(m);
        for (std::size_t base = 0; base < v; ++base) {
            if (g.digit(base, k) != 0) continue;
            for (std::size_t t = 0; t < m; ++t) line[t] = data[base + t * stride];
            for (std::size_t j = 0; j < m; ++j) {
                Complex acc{};
                for (std::size_t t = 0; t < m; ++t) acc += line[t] * twiddle[(j * t) % m];
                out[j] = acc;
            }
            for (std::size_t j = 0; j < m; ++j) data[base + j * stride] = out[j];
        }
    }
}

}  // namespace

Complex char_eval(const GroupSpec& g, std::size_t j, std::size_t x) {
    // Common denominator lcm(m_k) keeps the phase an exact rational.
    long long den = 1;
    for (int m : g.orders()) den = std::lcm(den, static_cast<long long>(m));
    long long num = 0;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        const long long m = g.orders()[k];
        num += (static_cast<long long>(g.digit(j, k)) * g.digit(x, k) % m) * (den / m);
    }
    return root_of_unity(num, den);
}

Complex char_eval(const GroupSpec& g, const Element& j, const Element& x) {
    return char_eval(g, g.index_of(j), g.index_of(x));
}

Complex inner_product(const ComplexFunction& f, const ComplexFunction& h) {
    if (!(f.group == h.group)) throw GroupMismatchError("inner product of functions on different groups");
    Complex s{};
    for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * std::conj(h[x]);
    return s;
}

ComplexFunction character_function(const GroupSpec& g, std::size_t j) {
    ComplexFunction chi(g);
    for (std::size_t x = 0; x < g.order(); ++x) chi[x] = char_eval(g, j, x);
    return chi;
}

Spectrum dft_naive(const ComplexFunction& f) {
    const GroupSpec& g = f.group;
    Spectrum s{g, std::vector<Complex>(g.order())};
    for (std::size_t j = 0; j < g.order(); ++j) {
        Complex acc{};
        for (std::size_t x = 0; x < g.order(); ++x) acc += f[x] * std::conj(char_eval(g, j, x));
        s.values[j] = acc;
    }
    return s;
}

Spectrum dft(const ComplexFunction& f) {
    Spectrum s{f.group, f.values};
    transform_axes(f.group, s.values, -1);
    return s;
}

ComplexFunction idft(const Spectrum& s) {
    std::vector<Complex> data = s.values;
    transform_axes(s.group, data, +1);
    const double scale = 1.0 / static_cast<double>(s.group.order());
    for (Complex& c : data) c *= scale;
    return ComplexFunction(s.group, std::move(data));
}

PowerSpectrum psd(const ComplexFunction& f) {
    const Spectrum s = dft(f);
    PowerSpectrum p{f.group, std::vector<double>(s.size())};
    for (std::size_t j = 0; j < s.size(); ++j) p.values[j] = std::norm(s[j]);
    return p;
}

bool wiener_khinchin_check(const ComplexFunction& f, double tol) {
    const PowerSpectrum lhs = psd(f);
    const Spectrum rhs = dft(paf_function(f));
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        if (std::abs(lhs[j] - rhs[j]) >= tol) return false;
    }
    return true;
}

double max_abs_diff(const Spectrum& a, const Spectrum& b) {
    if (!(a.group == b.group)) throw GroupMismatchError("spectra on different groups");
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst;
}

}  // namespace dfam
