#include "dfam/filter.hpp"

#include <cmath>
#include <numeric>

#include "dfam/error.hpp"

namespace dfam {

std::vector<std::int64_t> PsdFingerprint::quantized(double quantum) const {
    std::vector<std::int64_t> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::llround(values[i] / quantum);
    return out;
}

PsdFingerprint fingerprint(const GroupSpec& g, const Block& block) {
    const PowerSpectrum p = psd(associated_function(g, block));
    return PsdFingerprint{g, std::vector<double>(p.values.begin() + 1, p.values.end())};
}

bool psd_test(const GroupSpec& g, const Block& block, std::int64_t n, double tol) {
    const PowerSpectrum p = psd(associated_function(g, block));
    const double bound = 4.0 * static_cast<double>(n) + tol;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j] > bound) return false;
    }
    return true;
}

PhiFunction phi(const GroupSpec& g, const Block& block) {
    return function_of_algebra(norm(embed_subset(g, block)));
}

bool phi_test(const GroupSpec& g, const Block& block, std::int64_t n, double tol, double* max_imaginary) {
    const PhiFunction ph = phi(g, block);
    const auto k = static_cast<double>(block.size());
    double worst_imag = 0.0;
    bool pass = true;
    for (std::size_t j = 1; j < g.order(); ++j) {
        double re = 0.0, im = 0.0;
        for (std::size_t x = 1; x < g.order(); ++x) {
            if (ph[x] == 0) continue;
            const Complex c = char_eval(g, j, x);
            re += static_cast<double>(ph[x]) * c.real();
            im += static_cast<double>(ph[x]) * c.imag();
        }
        worst_imag = std::max(worst_imag, std::abs(im));
        // psd = 4 dft_Phi off the trivial character, so the tolerance scales by 1/4.
        if (re > static_cast<double>(n) - k + tol / 4.0) pass = false;
    }
    if (max_imaginary) *max_imaginary = worst_imag;
    return pass;
}

CompressionReport compression_report(std::span<const IntFunction> fs, const QuotientPresentation& q) {
    if (fs.empty()) throw ShapeError("need at least one function");
    CompressionReport r;
    const auto v = static_cast<std::int64_t>(q.parent.order());
    const auto m = static_cast<std::int64_t>(q.subgroup.order());

    std::int64_t alpha0 = 0, total = 0;
    for (const IntFunction& f : fs) {
        std::int64_t sum = 0;
        for (auto x : f.values) {
            alpha0 += x * x;
            sum += x;
        }
        total += sum * sum;
    }
    if (v > 1 && (total - alpha0) % (v - 1) == 0) {
        r.original = PafConstants{alpha0, (total - alpha0) / (v - 1)};
    } else if (v == 1) {
        r.original = PafConstants{alpha0, 0};
    }
    if (r.original) r.expected = PafConstants{r.original->alpha0 + (m - 1) * r.original->alpha, m * r.original->alpha};

    std::vector<IntFunction> compressed;
    compressed.reserve(fs.size());
    for (const IntFunction& f : fs) compressed.push_back(compress(f, q));
    r.observed = complementary_constants(compressed);
    r.complementary = r.observed.has_value();
    if (r.observed && r.expected && q.quotient.order() == 1) {
        // Trivial quotient: only the value at the identity exists.
        r.constants_match = r.observed->alpha0 == r.expected->alpha0;
    } else {
        r.constants_match = r.observed && r.expected && *r.observed == *r.expected;
    }
    return r;
}

bool compression_tuple_test(std::span<const IntFunction> fs, const QuotientPresentation& q) {
    const CompressionReport r = compression_report(fs, q);
    return r.complementary && r.constants_match;
}

std::size_t lift_character(const QuotientPresentation& q, std::size_t j_h) {
    const GroupSpec& g = q.parent;
    const GroupSpec& h = q.quotient;
    long long den = 1;
    for (int m : h.orders()) den = std::lcm(den, static_cast<long long>(m));
    Element lifted;
    lifted.residues.resize(g.rank());
    std::size_t unit_stride = g.order();
    for (std::size_t k = 0; k < g.rank(); ++k) {
        const long long mk = g.orders()[k];
        unit_stride /= static_cast<std::size_t>(mk);
        const std::size_t image = q.projection[unit_stride];  // sigma of the k-th unit vector
        long long num = 0;
        for (std::size_t l = 0; l < h.rank(); ++l) {
            const long long ql = h.orders()[l];
            num += (static_cast<long long>(h.digit(j_h, l)) * h.digit(image, l) % ql) * (den / ql);
        }
        num %= den;
        if ((num * mk) % den != 0) throw std::logic_error("lifted character is not a character of G");
        lifted.residues[k] = static_cast<int>((num * mk / den) % mk);
    }
    return g.index_of(lifted);
}

bool dft_compression_check(const ComplexFunction& f, const QuotientPresentation& q, double tol) {
    const Spectrum big = dft(f);
    const Spectrum small = dft(compress(f, q));
    for (std::size_t j_h = 0; j_h < q.quotient.order(); ++j_h) {
        const std::size_t j_g = lift_character(q, j_h);
        // The lift must agree with phi o sigma everywhere, not just on generators.
        for (std::size_t x = 0; x < q.parent.order(); ++x) {
            if (std::abs(char_eval(q.parent, j_g, x) - char_eval(q.quotient, j_h, q.projection[x])) > 1e-9) return false;
        }
        if (std::abs(big[j_g] - small[j_h]) > tol) return false;
    }
    return true;
}

}  // namespace dfam
