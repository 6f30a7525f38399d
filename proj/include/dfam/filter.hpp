#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dfam/algebra.hpp"
#include "dfam/family.hpp"
#include "dfam/fourier.hpp"
#include "dfam/group.hpp"

namespace dfam {

inline constexpr double kFingerprintQuantum = 1e-6;
inline constexpr double kPsdTestTolerance = 1e-6;

/// PSD of f_X at the v-1 nontrivial characters, in enumeration order.
struct PsdFingerprint {
    GroupSpec group;
    std::vector<double> values;

    std::vector<std::int64_t> quantized(double quantum = kFingerprintQuantum) const;
};

PsdFingerprint fingerprint(const GroupSpec& g, const Block& block);

/// Passes iff psd_{f_X}(chi) <= 4n + tol at every nontrivial character.
bool psd_test(const GroupSpec& g, const Block& block, std::int64_t n, double tol = kPsdTestTolerance);

/// Phi_X with N(X) = sum_x Phi_X(x) x.
using PhiFunction = IntFunction;
PhiFunction phi(const GroupSpec& g, const Block& block);

/**
 * The same test through Phi: sum_{x != e} Phi(x) Re chi(x) <= n - k for every
 * nontrivial chi. `max_imaginary`, when given, receives the largest imaginary
 * part of dft_Phi seen (zero up to rounding, since Phi is symmetric).
 */
bool phi_test(const GroupSpec& g, const Block& block, std::int64_t n, double tol = kPsdTestTolerance,
              double* max_imaginary = nullptr);

/// f^M(h) = sum of f over the fiber above h.
template <class T>
GFunction<T> compress(const GFunction<T>& f, const QuotientPresentation& q) {
    if (!(f.group == q.parent)) {
        throw GroupMismatchError("function on " + f.group.literal() + " but quotient of " + q.parent.literal());
    }
    GFunction<T> out(q.quotient);
    for (std::size_t x = 0; x < f.size(); ++x) out[q.projection[x]] += f[x];
    return out;
}

struct CompressionReport {
    bool complementary = false;        // sum of compressed PAFs constant off the identity
    bool constants_match = false;      // and equal to (alpha0 + (m-1) alpha, m alpha)
    std::optional<PafConstants> original;
    std::optional<PafConstants> expected;
    std::optional<PafConstants> observed;
};

/**
 * Compresses every function and checks the compressed tuple. The original
 * constants are inferred without forming the full PAF: alpha0 = sum ||f_i||^2
 * and alpha0 + (v-1) alpha = sum_i (sum_x f_i(x))^2.
 */
CompressionReport compression_report(std::span<const IntFunction> fs, const QuotientPresentation& q);
bool compression_tuple_test(std::span<const IntFunction> fs, const QuotientPresentation& q);

/// Character index of G equal to phi_{j_h} composed with the projection.
std::size_t lift_character(const QuotientPresentation& q, std::size_t j_h);

/// dft_{f^M}(phi) == dft_f(phi o sigma) for every character phi of the quotient.
bool dft_compression_check(const ComplexFunction& f, const QuotientPresentation& q, double tol = 1e-8);

}  // namespace dfam
