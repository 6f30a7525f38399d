#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "dfam/filter.hpp"
#include "dfam/fixtures.hpp"
#include "dfam/fourier.hpp"
#include "dfam/matrices.hpp"
#include "support.hpp"

namespace properties {

namespace {

using namespace dfam;
using testing_support::random_block;
using testing_support::random_complex_function;
using testing_support::random_group;
using testing_support::random_sign_function;

constexpr std::size_t kInstances = 120;

void check(Result& r, bool pass, const std::string& what) {
    ++r.instances;
    if (!pass) {
        if (r.failures == 0) r.first_failure = what;
        ++r.failures;
    }
}

double max_norm(const std::vector<Complex>& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

// A random translate of a fixture with some blocks complemented; still a family.
Fixture random_variant(const Fixture& f, std::mt19937_64& rng) {
    const GroupSpec& g = f.family.group;
    std::vector<Block> blocks;
    for (const Block& b : f.family.blocks) {
        Block nb = translate_block(g, b, std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng));
        if (rng() & 1) nb = complement_block(g, nb);
        blocks.push_back(nb);
    }
    Fixture out = f;
    out.family = make_family(g, std::move(blocks));
    return out;
}

std::string describe(const GroupSpec& g) { return g.literal(); }

Result wiener_khinchin(std::uint64_t seed) {
    Result r{"Wiener-Khinchin |psd - dft(paf)| < 1e-8"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        const ComplexFunction f = (i % 2) ? to_complex(random_sign_function(rng, g)) : random_complex_function(rng, g);
        const PowerSpectrum p = psd(f);
        const Spectrum s = dft(paf_function(f));
        double err = 0;
        for (std::size_t j = 0; j < g.order(); ++j) err = std::max(err, std::abs(s[j] - Complex(p[j], 0.0)));
        check(r, err < 1e-8 && wiener_khinchin_check(f, 1e-8), describe(g));
    }
    return r;
}

Result inversion_parseval(std::uint64_t seed) {
    Result r{"DFT inversion and Parseval (relative < 1e-8)"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        const ComplexFunction f = random_complex_function(rng, g);
        const Spectrum s = dft(f);
        const ComplexFunction back = idft(s);
        std::vector<Complex> diff(f.size());
        double energy = 0, spectral = 0;
        for (std::size_t x = 0; x < f.size(); ++x) {
            diff[x] = back[x] - f[x];
            energy += std::norm(f[x]);
            spectral += std::norm(s[x]);
        }
        const bool inv = max_norm(diff) <= 1e-8 * max_norm(f.values);
        const bool pars = std::abs(spectral - static_cast<double>(g.order()) * energy) <= 1e-8 * spectral;
        check(r, inv && pars, describe(g));
    }
    return r;
}

Result convolution(std::uint64_t seed) {
    Result r{"dft(f * h) = dft(f) dft(h)"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        const ComplexFunction f = random_complex_function(rng, g);
        const ComplexFunction h = random_complex_function(rng, g);
        const Spectrum lhs = dft(convolve(f, h));
        const Spectrum a = dft(f), b = dft(h);
        std::vector<Complex> prod(g.order()), diff(g.order());
        for (std::size_t j = 0; j < g.order(); ++j) {
            prod[j] = a[j] * b[j];
            diff[j] = lhs[j] - prod[j];
        }
        check(r, max_norm(diff) <= 1e-8 * std::max(1.0, max_norm(prod)), describe(g));
    }
    return r;
}

Result norm_is_paf(std::uint64_t seed) {
    Result r{"N(a_f) = sum paf_f(x) x, exact"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        const IntFunction f = random_sign_function(rng, g);
        const IntFunction lhs = function_of_algebra(norm(algebra_of_function(f)));
        check(r, lhs.values == oracle::paf(g.orders(), f.values) && lhs.values == paf_function(f).values, describe(g));
    }
    return r;
}

Result sum_of_squares(std::uint64_t seed) {
    Result r{"sum (v - 2k_i)^2 = 4n + v(tv - 4n) on fixture families and variants"};
    std::mt19937_64 rng(seed);
    const auto fixtures = all_fixtures();
    std::size_t i = 0;
    while (r.instances < kInstances) {
        const Fixture& base = fixtures[i++ % fixtures.size()];
        const Fixture f = r.instances < fixtures.size() ? base : random_variant(base, rng);
        const ParameterSet& p = f.family.params;
        std::int64_t lhs = 0;
        for (auto k : p.k) lhs += (p.v - 2 * k) * (p.v - 2 * k);
        const std::int64_t rhs = 4 * p.n() + p.v * (static_cast<std::int64_t>(p.t()) * p.v - 4 * p.n());
        const bool valid = verify_family(f.family, f.gs_mode).valid;
        check(r, valid && lhs == rhs && sum_of_squares_check(p), f.name + " " + p.literal());
    }
    return r;
}

Result compression_constants(std::uint64_t seed) {
    Result r{"compressed PAF constants (alpha0 + (m-1) alpha, m alpha) over every subgroup"};
    std::mt19937_64 rng(seed);
    const auto fixtures = all_fixtures();
    bool first_pass = true;
    while (r.instances < kInstances) {
        for (const Fixture& base : fixtures) {
            const Fixture f = first_pass ? base : random_variant(base, rng);
            const GroupSpec& g = f.family.group;
            const PafConstants c = paf_constants(f.family.params);
            const auto fs = associated_functions(f.family);
            for (const auto& members : oracle::all_subgroups(g.orders())) {
                std::vector<Element> els;
                for (const auto& m : members) els.push_back(Element{m});
                const QuotientPresentation q = quotient(g, make_subgroup(g, els));
                const auto m = static_cast<std::int64_t>(members.size());
                // Independent check: sum of the oracle PAFs of the compressed functions.
                std::vector<std::int64_t> total(q.quotient.order(), 0);
                for (const auto& fn : fs) {
                    const auto pa = oracle::paf(q.quotient.orders(), compress(fn, q).values);
                    for (std::size_t x = 0; x < total.size(); ++x) total[x] += pa[x];
                }
                bool ok = total[0] == c.alpha0 + (m - 1) * c.alpha;
                for (std::size_t x = 1; x < total.size(); ++x) ok = ok && total[x] == m * c.alpha;
                ok = ok && compression_tuple_test(fs, q);
                check(r, ok, f.name + " / subgroup of order " + std::to_string(m));
            }
        }
        first_pass = false;
    }
    return r;
}

Result dual_map(std::uint64_t seed) {
    Result r{"dft_f(lift(phi)) = dft_{f^M}(phi) (< 1e-8)"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        std::vector<Element> gens;
        const std::size_t ngens = 1 + rng() % 2;
        for (std::size_t k = 0; k < ngens; ++k) gens.push_back(g.element_at(rng() % g.order()));
        const QuotientPresentation q = quotient(g, subgroup_generate(g, gens));
        const ComplexFunction f = random_complex_function(rng, g);
        // Independent side: characters of G trivial on M, read off directly.
        const Spectrum big = dft(f);
        std::vector<std::size_t> trivial_on_m;
        for (std::size_t j = 0; j < g.order(); ++j) {
            bool trivial = true;
            for (std::size_t m : q.subgroup.members) trivial = trivial && std::abs(char_eval(g, j, m) - 1.0) < 1e-9;
            if (trivial) trivial_on_m.push_back(j);
        }
        bool ok = dft_compression_check(f, q, 1e-8) && trivial_on_m.size() == q.quotient.order();
        std::vector<std::size_t> lifted;
        for (std::size_t jh = 0; jh < q.quotient.order(); ++jh) lifted.push_back(lift_character(q, jh));
        std::sort(lifted.begin(), lifted.end());
        ok = ok && lifted == trivial_on_m;
        check(r, ok, describe(g) + " / |M| = " + std::to_string(q.subgroup.order()));
    }
    return r;
}

Result rar(std::uint64_t seed) {
    Result r{"R A R = A^T for G-invariant A, exact"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng, 24);
        IntAlgebraElement a(g);
        for (std::size_t x = 0; x < g.order(); ++x) a.add_to(x, static_cast<std::int64_t>(rng() % 11) - 5);
        const IntMatrix m = regular_rep(a);
        const IntMatrix rm = r_matrix(g);
        check(r, rm * m * rm == m.transpose() && rm * rm == IntMatrix::identity(g.order()), describe(g));
    }
    return r;
}

Result psd_phi_agreement(std::uint64_t seed) {
    Result r{"psd_test and phi_test agree"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const GroupSpec g = random_group(rng);
        const Block b = random_block(rng, g);
        const PsdFingerprint fp = fingerprint(g, b);
        const double top = *std::max_element(fp.values.begin(), fp.values.end());
        // n near the threshold max psd / 4, where the tests are decided.
        const auto n = static_cast<std::int64_t>(std::ceil(top / 4.0 - 1e-9)) - static_cast<std::int64_t>(rng() % 2);
        check(r, psd_test(g, b, n) == phi_test(g, b, n), describe(g) + " n=" + std::to_string(n));
    }
    return r;
}

Result round_trip(std::uint64_t seed) {
    Result r{"family -> functions -> family is the identity"};
    std::mt19937_64 rng(seed);
    std::vector<Fixture> fixtures{do_pair_z3xz3(), golay_pair_z3xz6(), legendre_symmetric_z5xz5(),
                                  legendre_skew_z5xz5()};
    for (std::size_t i = 0; i < kInstances; ++i) {
        const Fixture f = random_variant(fixtures[i % fixtures.size()], rng);
        const auto fs = associated_functions(f.family);
        const DifferenceFamily back = family_from_functions(fs);
        check(r, back.blocks == f.family.blocks && back.params == f.family.params, f.name);
    }
    return r;
}

}  // namespace

std::vector<Result> run_all(std::uint64_t seed) {
    std::vector<Result> out;
    const std::vector<std::function<Result(std::uint64_t)>> all{
        wiener_khinchin, inversion_parseval, convolution, norm_is_paf, sum_of_squares,
        compression_constants, dual_map, rar, psd_phi_agreement, round_trip};
    for (std::size_t i = 0; i < all.size(); ++i) {
        try {
            out.push_back(all[i](seed + i));
        } catch (const std::exception& e) {
            Result r{"property " + std::to_string(i)};
            r.failures = 1;
            r.first_failure = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace properties
