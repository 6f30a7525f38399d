// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dfam/fixtures.hpp"
#include "dfam/matrices.hpp"
#include "dfam/search.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace dfam;
using testing_support::to_oracle;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < limit_seconds;
    const bool pass = o.pass && in_time;
    std::printf("[%s] criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!in_time) std::printf("       time limit exceeded\n");
    std::fflush(stdout);
    return pass;
}

IntMatrix scaled_identity_plus_ones(std::size_t v, std::int64_t a, std::int64_t b) {
    return a * IntMatrix::identity(v) + b * IntMatrix::ones(v);
}

SearchResult run_search(const std::string& group, bool prune) {
    SearchConfig cfg;
    cfg.mode = SearchMode::exhaustive;
    cfg.params = parse_params("18;9,6;6");
    cfg.psd_prune = prune;
    return search(parse_group_literal(group), cfg);
}

bool same_solutions(const SearchResult& a, const SearchResult& b) {
    if (a.families.size() != b.families.size()) return false;
    for (std::size_t i = 0; i < a.families.size(); ++i) {
        if (a.families[i].blocks != b.families[i].blocks) return false;
    }
    return true;
}

}  // namespace

int main() {
    bool all = true;

    all &= run_criterion(1, "(9;3,2;1) in Z3xZ3 gives a symmetric D-optimal matrix of order 18", 1.0, [] {
        const Fixture f = do_pair_z3xz3();
        const FamilyReport r = verify_family(f.family);
        const auto a = family_matrices(f.family);
        const bool gram = a[0] * a[0].transpose() + a[1] * a[1].transpose() == scaled_identity_plus_ones(9, 16, 2);
        // The symmetric block leads in the symmetric array.
        const IntMatrix h = do_array(a[1], a[0], true);
        const BigInt expected = BigInt(512) * 17 * BigInt(16777216);
        const BigInt det = abs(determinant(h));
        const BigInt det_oracle = abs(oracle::determinant(to_oracle(h)));
        std::ostringstream d;
        d << "|det| = " << det << ", expected " << expected;
        return Outcome{r.valid && r.counting_valid && r.algebra_valid && gram && h.is_symmetric() &&
                           h.is_sign_matrix() && det == expected && det_oracle == expected,
                       d.str()};
    });

    all &= run_criterion(2, "(18;9,6;6) in Z3xZ6 gives a symmetric Hadamard matrix of order 36", 1.0, [] {
        const Fixture f = golay_pair_z3xz6();
        const FamilyReport r = verify_family(f.family);
        const auto a = family_matrices(f.family);
        const IntMatrix h = golay_array(a[0], a[1]);
        const bool hh = h * h.transpose() == 36 * IntMatrix::identity(36);
        return Outcome{r.valid && h.rows() == 36 && h.is_symmetric() && hh && oracle::is_hadamard(to_oracle(h)), ""};
    });

    SearchResult cyclic, product;
    all &= run_criterion(3, "exhaustive search for (18;9,6;6) in Z18 finds nothing", 300.0, [&] {
        cyclic = run_search("Z18", true);
        return Outcome{cyclic.families.empty() && !cyclic.stats.budget_exhausted,
                       std::to_string(cyclic.stats.candidates) + " blocks, " +
                           std::to_string(cyclic.stats.pruned_by_psd) + " pruned, 0 expected solutions, " +
                           std::to_string(cyclic.families.size()) + " found"};
    });

    all &= run_criterion(4, "exhaustive search for (18;9,6;6) in Z3xZ6 finds the fixture's class", 300.0, [&] {
        product = run_search("Z3xZ6", true);
        const Fixture f = golay_pair_z3xz6();
        const GroupSpec& g = f.family.group;
        bool fixture_found = false;
        for (std::size_t a = 0; a < g.order() && !fixture_found; ++a) {
            std::vector<Block> shifted;
            for (const Block& b : f.family.blocks) shifted.push_back(translate_block(g, b, a));
            for (const auto& fam : product.families) fixture_found = fixture_found || fam.blocks == shifted;
        }
        bool all_valid = true;
        for (const auto& fam : product.families) all_valid = all_valid && verify_family(fam).valid;
        return Outcome{!product.families.empty() && fixture_found && all_valid,
                       std::to_string(product.families.size()) + " families, fixture class " +
                           (fixture_found ? "present" : "missing")};
    });

    all &= run_criterion(5, "Legendre pairs in Z5xZ5 give symmetric and skew Hadamard matrices of order 52", 2.0, [] {
        bool ok = true;
        for (const Fixture& f : {legendre_symmetric_z5xz5(), legendre_skew_z5xz5()}) {
            ok = ok && verify_family(f.family).valid;
            const auto c = complementary_constants(associated_functions(f.family));
            ok = ok && c && c->alpha0 == 50 && c->alpha == -2;
        }
        const auto s = family_matrices(legendre_symmetric_z5xz5().family);
        const IntMatrix hs = legendre_array(s[0], s[1], LegendreKind::symmetric);
        const auto k = family_matrices(legendre_skew_z5xz5().family);
        const IntMatrix hk = legendre_array(k[0], k[1], LegendreKind::skew);
        const IntMatrix i52 = IntMatrix::identity(52);
        ok = ok && hs.rows() == 52 && hs * hs.transpose() == 52 * i52 && hs.is_symmetric();
        ok = ok && hk.rows() == 52 && hk * hk.transpose() == 52 * i52 && hk + hk.transpose() == 2 * i52;
        ok = ok && oracle::is_hadamard(to_oracle(hs)) && oracle::is_hadamard(to_oracle(hk));
        return Outcome{ok, ""};
    });

    all &= run_criterion(6, "GS quadruples give Hadamard matrices of orders 4, 8, 12, 16 and Bush-type order 16", 1.0, [] {
        bool ok = true;
        std::vector<std::string> orders;
        bool z4 = false, klein = false;
        for (std::size_t v = 1; v <= 4; ++v) {
            for (const GsCase& c : gs_quadruple_search(v)) {
                for (const auto& fam : c.families) {
                    const auto a = family_matrices(fam);
                    const IntMatrix h = gs_array({a[0], a[1], a[2], a[3]}, r_matrix(fam.group));
                    ok = ok && h.rows() == 4 * v && oracle::is_hadamard(to_oracle(h));
                }
                if (!c.families.empty()) {
                    if (c.group.orders() == std::vector<int>{4}) z4 = true;
                    if (c.group.orders() == std::vector<int>{2, 2}) klein = true;
                }
            }
        }
        // Every worked GS family is among the search results.
        for (const Fixture& f : gs_fixtures()) {
            bool found = false;
            for (const GsCase& c : gs_quadruple_search(f.family.group.order())) {
                for (const auto& fam : c.families) found = found || (fam.group == f.family.group && fam.blocks == f.family.blocks);
            }
            ok = ok && found;
        }
        const std::vector<MatrixProperty> bush{MatrixProperty::hadamard, MatrixProperty::bush};
        const auto z = family_matrices(gs_fixtures()[3].family);
        const IntMatrix hz = gs_array({z[0], z[1], z[2], z[3]}, r_matrix(gs_fixtures()[3].family.group));
        ok = ok && verify_matrix(hz, bush, 4).all_pass();

        const Fixture kf = gs_fixtures()[4];
        const auto k = family_matrices(kf.family);
        const IntMatrix i4 = IntMatrix::identity(4);
        ok = ok && r_matrix(kf.family.group) == i4;
        const IntMatrix hk = gs_array({k[0], k[1], k[2], k[3]}, i4, GsSigns::symmetric);
        const std::vector<MatrixProperty> klein_props{MatrixProperty::hadamard, MatrixProperty::symmetric,
                                                      MatrixProperty::bush};
        ok = ok && verify_matrix(hk, klein_props, 4).all_pass();
        ok = ok && k[0] * k[0] == 4 * k[0];
        for (std::size_t i = 1; i < 4; ++i) {
            ok = ok && k[i] * k[i] == -4 * k[i];
            for (std::size_t j = 1; j < 4; ++j) {
                if (i != j) ok = ok && k[i] * k[j] == IntMatrix(4, 4, 0);
            }
        }
        ok = ok && k[0] - k[1] - k[2] - k[3] == 4 * i4;
        return Outcome{ok && z4 && klein, ""};
    });

    all &= run_criterion(7, "property suite, >= 100 randomized instances each", 900.0, [] {
        bool ok = true;
        std::ostringstream d;
        for (const auto& r : properties::run_all()) {
            ok = ok && r.ok();
            d << "\n       " << (r.ok() ? "ok   " : "FAIL ") << r.name << " [" << r.instances << " instances, "
              << r.failures << " failures]";
            if (!r.first_failure.empty()) d << " first failure: " << r.first_failure;
        }
        return Outcome{ok, d.str()};
    });

    all &= run_criterion(8, "searches with PSD pruning disabled give identical solution sets", 600.0, [&] {
        const SearchResult c = run_search("Z18", false);
        const SearchResult p = run_search("Z3xZ6", false);
        return Outcome{same_solutions(c, cyclic) && same_solutions(p, product) && c.stats.pruned_by_psd == 0,
                       "Z18: " + std::to_string(c.families.size()) + " vs " + std::to_string(cyclic.families.size()) +
                           ", Z3xZ6: " + std::to_string(p.families.size()) + " vs " +
                           std::to_string(product.families.size())};
    });

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
