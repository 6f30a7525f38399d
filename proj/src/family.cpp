#include "dfam/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dfam/error.hpp"

namespace dfam {

std::int64_t ParameterSet::n() const { return std::accumulate(k.begin(), k.end(), std::int64_t{0}) - lambda; }

std::string ParameterSet::literal() const {
    std::string s = std::to_string(v) + ";";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k[i]);
    }
    return s + ";" + std::to_string(lambda);
}

ParameterSet parse_params(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '(' && c != ')') s += c;
    }
    const auto first = s.find(';');
    const auto last = s.rfind(';');
    if (first == std::string::npos || first == last) {
        throw ParseError("parameter literal must look like 'v;k1,k2,...;lambda', got '" + std::string(text) + "'");
    }
    auto to_int = [&](const std::string& tok) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw ParseError("bad integer '" + tok + "' in parameter literal");
        return value;
    };
    ParameterSet p;
    p.v = to_int(s.substr(0, first));
    std::stringstream ks(s.substr(first + 1, last - first - 1));
    std::string tok;
    while (std::getline(ks, tok, ',')) p.k.push_back(to_int(tok));
    p.lambda = to_int(s.substr(last + 1));
    if (p.k.empty()) throw ParseError("parameter literal lists no block sizes");
    return p;
}

bool validate_params(const ParameterSet& p, bool gs_mode) {
    if (p.k.empty()) return false;
    if (gs_mode) {
        if (p.v < 1) return false;
        for (auto ki : p.k) {
            if (ki < 0 || ki > p.v) return false;
        }
    } else {
        if (p.v < 2) return false;
        for (auto ki : p.k) {
            if (ki < 1 || ki > p.v - 1) return false;
        }
    }
    if (p.v == 1) {
        // Counting identity is vacuous; lambda comes from sum k_i = lambda + v.
        const auto sum = std::accumulate(p.k.begin(), p.k.end(), std::int64_t{0});
        return p.lambda == sum - p.v;
    }
    std::int64_t lhs = 0;
    for (auto ki : p.k) lhs += ki * (ki - 1);
    return lhs == p.lambda * (p.v - 1);
}

Block make_block(const GroupSpec& g, std::span<const Element> elements) {
    Block b;
    b.reserve(elements.size());
    for (const Element& x : elements) b.push_back(g.index_of(x));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw DomainError("block lists an element twice");
    return b;
}

std::vector<Element> block_elements(const GroupSpec& g, const Block& block) {
    std::vector<Element> out;
    out.reserve(block.size());
    for (std::size_t x : block) out.push_back(g.element_at(x));
    return out;
}

Block translate_block(const GroupSpec& g, const Block& block, std::size_t shift) {
    Block out;
    out.reserve(block.size());
    for (std::size_t x : block) out.push_back(g.add(x, shift));
    std::sort(out.begin(), out.end());
    return out;
}

Block complement_block(const GroupSpec& g, const Block& block) {
    Block out;
    out.reserve(g.order() - block.size());
    std::size_t pos = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (pos < block.size() && block[pos] == x) {
            ++pos;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

Block inverse_block(const GroupSpec& g, const Block& block) {
    Block out;
    out.reserve(block.size());
    for (std::size_t x : block) out.push_back(g.negate(x));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_block(const GroupSpec& g, const Block& b, std::size_t i) {
    for (std::size_t x : b) {
        if (x >= g.order()) throw DomainError("block " + std::to_string(i + 1) + " has an element outside " + g.literal());
    }
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end()) {
        throw DomainError("block " + std::to_string(i + 1) + " is not a set");
    }
}

}  // namespace

std::vector<std::int64_t> difference_counts(const GroupSpec& g, std::span<const Block> blocks) {
    std::vector<std::int64_t> counts(g.order(), 0);
    for (const Block& b : blocks) {
        for (std::size_t x : b) {
            for (std::size_t y : b) {
                if (x != y) ++counts[g.sub(y, x)];
            }
        }
    }
    counts[0] = 0;
    return counts;
}

DifferenceFamily make_family(const GroupSpec& g, std::vector<Block> blocks, std::optional<std::int64_t> lambda) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::sort(blocks[i].begin(), blocks[i].end());
        check_block(g, blocks[i], i);
    }
    ParameterSet p;
    p.v = static_cast<std::int64_t>(g.order());
    for (const Block& b : blocks) p.k.push_back(static_cast<std::int64_t>(b.size()));
    if (lambda) {
        p.lambda = *lambda;
    } else if (g.order() == 1) {
        p.lambda = std::accumulate(p.k.begin(), p.k.end(), std::int64_t{0}) - p.v;
    } else {
        p.lambda = difference_counts(g, blocks)[1];
    }
    return DifferenceFamily{g, std::move(blocks), std::move(p)};
}

FamilyReport verify_family(const DifferenceFamily& family, bool gs_mode) {
    const GroupSpec& g = family.group;
    const ParameterSet& declared = family.params;
    if (declared.k.size() != family.blocks.size()) {
        throw ShapeError("parameter set lists " + std::to_string(declared.k.size()) + " block sizes for " +
                         std::to_string(family.blocks.size()) + " blocks");
    }
    if (declared.v != static_cast<std::int64_t>(g.order())) throw ShapeError("parameter v does not match group order");
    for (std::size_t i = 0; i < family.blocks.size(); ++i) {
        check_block(g, family.blocks[i], i);
        if (static_cast<std::int64_t>(family.blocks[i].size()) != declared.k[i]) {
            throw ShapeError("block " + std::to_string(i + 1) + " has " + std::to_string(family.blocks[i].size()) +
                             " elements, parameters say " + std::to_string(declared.k[i]));
        }
    }

    FamilyReport r;
    r.params = declared;
    r.counts = difference_counts(g, family.blocks);

    // Counting route: Definition-level ground truth.
    r.counting_valid = true;
    for (std::size_t a = 1; a < g.order(); ++a) {
        if (r.counts[a] != declared.lambda) r.counting_valid = false;
    }
    // Algebra route: sum N(X_i) == n e + lambda G.
    IntAlgebraElement lhs(g);
    for (const Block& b : family.blocks) lhs += norm(embed_subset(g, b));
    IntAlgebraElement rhs = declared.n() * unit_element(g) + declared.lambda * group_sum(g);
    r.algebra_valid = lhs == rhs;
    r.methods_agree = r.counting_valid == r.algebra_valid;

    std::string structural;
    if (!validate_params(declared, gs_mode)) {
        structural = "parameter set " + declared.literal() + " is not admissible" + (gs_mode ? " in GS mode" : "");
    }
    if (!gs_mode) {
        for (std::size_t i = 0; i < family.blocks.size(); ++i) {
            const auto k = family.blocks[i].size();
            if (k == 0 || k == g.order()) {
                structural = "block " + std::to_string(i + 1) + " is trivial (allowed only in GS mode)";
            }
        }
    }

    r.valid = r.counting_valid && r.algebra_valid && structural.empty();
    if (!r.methods_agree) {
        r.reason = "counting and group-algebra checks disagree";
    } else if (!r.counting_valid) {
        r.reason = "difference counts are not all equal to lambda=" + std::to_string(declared.lambda);
    } else {
        r.reason = structural;
    }
    return r;
}

DifferenceFamily normalize(const DifferenceFamily& family) {
    const GroupSpec& g = family.group;
    DifferenceFamily out = family;
    const auto v = static_cast<std::int64_t>(g.order());
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        const auto k = static_cast<std::int64_t>(out.blocks[i].size());
        if (2 * k > v) {
            out.blocks[i] = complement_block(g, out.blocks[i]);
            out.params.lambda += v - 2 * k;
            out.params.k[i] = v - k;
        }
    }
    std::vector<std::size_t> order(out.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.blocks[a].size() > out.blocks[b].size(); });
    DifferenceFamily sorted{g, {}, out.params};
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.blocks.push_back(out.blocks[order[i]]);
        sorted.params.k[i] = out.params.k[order[i]];
    }
    return sorted;
}

IntFunction associated_function(const GroupSpec& g, const Block& block) {
    IntFunction f(g, std::vector<std::int64_t>(g.order(), 1));
    for (std::size_t x : block) {
        if (x >= g.order()) throw DomainError("block element outside " + g.literal());
        f[x] = -1;
    }
    return f;
}

std::vector<IntFunction> associated_functions(const DifferenceFamily& family) {
    std::vector<IntFunction> fs;
    for (const Block& b : family.blocks) fs.push_back(associated_function(family.group, b));
    return fs;
}

PafConstants paf_constants(const ParameterSet& p) {
    const auto t = static_cast<std::int64_t>(p.t());
    return {t * p.v, t * p.v - 4 * p.n()};
}

PsdConstants psd_constants_from_paf(std::int64_t v, const PafConstants& c) {
    return {c.alpha0 + (v - 1) * c.alpha, c.alpha0 - c.alpha};
}

PsdConstants psd_constants(const ParameterSet& p) { return psd_constants_from_paf(p.v, paf_constants(p)); }

IntFunction paf_sum(std::span<const IntFunction> fs) {
    if (fs.empty()) throw ShapeError("need at least one function");
    IntFunction total(fs.front().group);
    for (const IntFunction& f : fs) {
        if (!(f.group == total.group)) throw GroupMismatchError("functions on different groups");
        const IntFunction p = paf_function(f);
        for (std::size_t x = 0; x < p.size(); ++x) total[x] += p[x];
    }
    return total;
}

std::optional<PafConstants> complementary_constants(std::span<const IntFunction> fs) {
    const IntFunction s = paf_sum(fs);
    if (s.size() == 1) return PafConstants{s[0], 0};
    for (std::size_t x = 2; x < s.size(); ++x) {
        if (s[x] != s[1]) return std::nullopt;
    }
    return PafConstants{s[0], s[1]};
}

DifferenceFamily family_from_functions(std::span<const IntFunction> fs) {
    if (fs.empty()) throw ShapeError("need at least one function");
    const GroupSpec& g = fs.front().group;
    std::vector<Block> blocks;
    for (const IntFunction& f : fs) {
        Block b;
        bool has_plus = false;
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (f[x] == -1) {
                b.push_back(x);
            } else if (f[x] == 1) {
                has_plus = true;
            } else {
                throw DomainError("function is not {+1,-1}-valued");
            }
        }
        if (b.empty() || !has_plus) throw NotComplementaryError("constant function cannot give a proper nonempty block");
        blocks.push_back(std::move(b));
    }
    const auto c = complementary_constants(fs);
    if (!c) throw NotComplementaryError("PAF sum is not constant off the identity");
    const auto t = static_cast<std::int64_t>(fs.size());
    const auto v = static_cast<std::int64_t>(g.order());
    if (c->alpha0 != t * v) throw NotComplementaryError("alpha0 differs from tv");
    if ((t * v - c->alpha) % 4 != 0) throw NotComplementaryError("tv - alpha is not divisible by 4");
    std::int64_t sum_k = 0;
    for (const Block& b : blocks) sum_k += static_cast<std::int64_t>(b.size());
    DifferenceFamily fam = make_family(g, std::move(blocks), sum_k - (t * v - c->alpha) / 4);
    const FamilyReport r = verify_family(fam);
    if (!r.valid) throw NotComplementaryError("recovered blocks fail verification: " + r.reason);
    return fam;
}

bool is_symmetric_block(const GroupSpec& g, const Block& block) { return inverse_block(g, block) == block; }

bool is_skew_block(const GroupSpec& g, const Block& block) {
    // G = X u X^-1 u {e}, disjointly.
    if (2 * block.size() + 1 != g.order()) return false;
    std::vector<int> hits(g.order(), 0);
    hits[0] = 1;
    for (std::size_t x : block) {
        ++hits[x];
        ++hits[g.negate(x)];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool sum_of_squares_check(const ParameterSet& p) {
    const auto t = static_cast<std::int64_t>(p.t());
    std::int64_t lhs = 0;
    for (auto ki : p.k) lhs += (p.v - 2 * ki) * (p.v - 2 * ki);
    const std::int64_t n = p.n();
    return lhs == 4 * n + p.v * (t * p.v - 4 * n);
}

}  // namespace dfam
