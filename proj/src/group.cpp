#include "dfam/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dfam/error.hpp"

namespace dfam {

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) {
        throw InvalidOrderError("group needs at least one cyclic factor");
    }
    for (int m : orders_) {
        if (m < 1) {
            throw InvalidOrderError("cyclic order must be >= 1, got " + std::to_string(m));
        }
    }
    strides_.assign(orders_.size(), 1);
    for (std::size_t k = orders_.size(); k-- > 1;) {
        strides_[k - 1] = strides_[k] * static_cast<std::size_t>(orders_[k]);
    }
    order_ = strides_[0] * static_cast<std::size_t>(orders_[0]);
}

bool GroupSpec::contains(const Element& x) const noexcept {
    if (x.residues.size() != orders_.size()) return false;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        if (x.residues[k] < 0 || x.residues[k] >= orders_[k]) return false;
    }
    return true;
}

std::size_t GroupSpec::index_of(const Element& x) const {
    if (x.residues.size() != orders_.size()) {
        throw ShapeError("element has " + std::to_string(x.residues.size()) + " coordinates, group " +
                         literal() + " needs " + std::to_string(orders_.size()));
    }
    if (!contains(x)) {
        throw DomainError("element not in " + literal());
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        index += strides_[k] * static_cast<std::size_t>(x.residues[k]);
    }
    return index;
}

Element GroupSpec::element_at(std::size_t index) const {
    if (index >= order_) throw DomainError("element index out of range");
    Element x;
    x.residues.resize(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) x.residues[k] = digit(index, k);
    return x;
}

std::size_t GroupSpec::add(std::size_t a, std::size_t b) const noexcept {
    std::size_t out = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        const auto m = static_cast<std::size_t>(orders_[k]);
        const std::size_t da = (a / strides_[k]) % m;
        const std::size_t db = (b / strides_[k]) % m;
        std::size_t s = da + db;
        if (s >= m) s -= m;
        out += s * strides_[k];
    }
    return out;
}

std::size_t GroupSpec::negate(std::size_t a) const noexcept {
    std::size_t out = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        const auto m = static_cast<std::size_t>(orders_[k]);
        const std::size_t da = (a / strides_[k]) % m;
        out += (da == 0 ? 0 : m - da) * strides_[k];
    }
    return out;
}

std::string GroupSpec::literal() const {
    std::string s;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        if (k) s += 'x';
        s += 'Z' + std::to_string(orders_[k]);
    }
    return s;
}

GroupSpec make_group(std::span<const int> orders) { return GroupSpec(std::vector<int>(orders.begin(), orders.end())); }

GroupSpec parse_group_literal(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty group literal");
    std::vector<int> orders;
    auto parse_int = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; })) {
            throw ParseError("bad cyclic order '" + tok + "' in group literal '" + std::string(text) + "'");
        }
        try {
            return std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError("bad cyclic order '" + tok + "'");
        }
    };
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated group list '" + std::string(text) + "'");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) orders.push_back(parse_int(tok));
    } else {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, 'x')) {
            if (!tok.empty() && (tok.front() == 'Z' || tok.front() == 'z')) tok.erase(0, 1);
            orders.push_back(parse_int(tok));
        }
    }
    return GroupSpec(std::move(orders));
}

Element make_element(const GroupSpec& g, std::span<const int> residues) {
    if (residues.size() != g.rank()) {
        throw ShapeError("element has " + std::to_string(residues.size()) + " coordinates, group " + g.literal() +
                         " needs " + std::to_string(g.rank()));
    }
    Element x;
    x.residues.resize(residues.size());
    for (std::size_t k = 0; k < residues.size(); ++k) {
        const int m = g.orders()[k];
        x.residues[k] = ((residues[k] % m) + m) % m;
    }
    return x;
}

namespace {

void require_member(const GroupSpec& g, const Element& x) {
    if (x.residues.size() != g.rank()) {
        throw ShapeError("element dimension " + std::to_string(x.residues.size()) + " does not match group " +
                         g.literal());
    }
    if (!g.contains(x)) throw DomainError("element not reduced for group " + g.literal());
}

}  // namespace

Element compose(const GroupSpec& g, const Element& x, const Element& y) {
    require_member(g, x);
    require_member(g, y);
    Element z;
    z.residues.resize(g.rank());
    for (std::size_t k = 0; k < g.rank(); ++k) z.residues[k] = (x.residues[k] + y.residues[k]) % g.orders()[k];
    return z;
}

Element inverse(const GroupSpec& g, const Element& x) {
    require_member(g, x);
    Element z;
    z.residues.resize(g.rank());
    for (std::size_t k = 0; k < g.rank(); ++k) {
        z.residues[k] = (g.orders()[k] - x.residues[k]) % g.orders()[k];
    }
    return z;
}

Element identity(const GroupSpec& g) { return Element{std::vector<int>(g.rank(), 0)}; }

std::vector<Element> enumerate(const GroupSpec& g) {
    std::vector<Element> out;
    out.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
    return out;
}

std::size_t element_order(const GroupSpec& g, std::size_t index) {
    std::size_t o = 1;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        const auto m = static_cast<std::size_t>(g.orders()[k]);
        const auto d = static_cast<std::size_t>(g.digit(index, k));
        o = std::lcm(o, m / std::gcd(m, d));
    }
    return o;
}

bool Subgroup::contains(std::size_t index) const { return std::binary_search(members.begin(), members.end(), index); }

Subgroup subgroup_generate(const GroupSpec& g, std::span<const Element> gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (const Element& gen : gens) {
        const std::size_t s = g.index_of(gen);
        // Close under adding s: every new member spawns its translate.
        for (std::size_t i = 0; i < members.size(); ++i) {
            const std::size_t next = g.add(members[i], s);
            if (!in[next]) {
                in[next] = true;
                members.push_back(next);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{g, std::move(members)};
}

Subgroup make_subgroup(const GroupSpec& g, std::span<const Element> members) {
    std::vector<std::size_t> idx;
    idx.reserve(members.size());
    for (const Element& x : members) idx.push_back(g.index_of(x));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Subgroup m{g, std::move(idx)};
    if (m.members.empty() || m.members.front() != 0) throw InvalidSubgroupError("subgroup must contain the identity");
    for (std::size_t a : m.members) {
        if (!m.contains(g.negate(a))) throw InvalidSubgroupError("subgroup not closed under inverse");
        for (std::size_t b : m.members) {
            if (!m.contains(g.add(a, b))) throw InvalidSubgroupError("subgroup not closed under composition");
        }
    }
    return m;
}

Element QuotientPresentation::project(const Element& x) const {
    return quotient.element_at(projection.at(parent.index_of(x)));
}

QuotientPresentation quotient(const GroupSpec& g, const Subgroup& m) {
    if (!(m.parent == g)) throw GroupMismatchError("subgroup belongs to " + m.parent.literal() + ", not " + g.literal());
    {
        std::vector<Element> els;
        for (std::size_t i : m.members) els.push_back(g.element_at(i));
        (void)make_subgroup(g, els);  // throws unless closed
    }

    // Coset labelling; the first element met in each coset is its smallest.
    const std::size_t v = g.order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> coset(v, unset);
    std::vector<std::size_t> coset_rep;
    for (std::size_t x = 0; x < v; ++x) {
        if (coset[x] != unset) continue;
        const std::size_t c = coset_rep.size();
        coset_rep.push_back(x);
        for (std::size_t z : m.members) coset[g.add(x, z)] = c;
    }
    const std::size_t d = coset_rep.size();
    auto qadd = [&](std::size_t a, std::size_t b) { return coset[g.add(coset_rep[a], coset_rep[b])]; };
    auto qneg = [&](std::size_t a) { return coset[g.negate(coset_rep[a])]; };
    auto qmul = [&](std::size_t a, std::size_t times) {
        std::size_t acc = 0;
        for (std::size_t i = 0; i < times; ++i) acc = qadd(acc, a);
        return acc;
    };

    // Greedy peeling: for spanned cosets, span[h] is the coefficient vector of
    // h over the cyclic generators chosen so far.
    std::vector<std::vector<int>> span(d);
    std::vector<bool> spanned(d, false);
    spanned[0] = true;
    std::size_t spanned_count = 1;
    std::vector<int> factor_orders;
    while (spanned_count < d) {
        std::size_t best = 0, best_order = 0;
        for (std::size_t b = 0; b < d; ++b) {
            if (spanned[b]) continue;
            std::size_t o = 1;
            for (std::size_t acc = b; !spanned[acc]; acc = qadd(acc, b)) ++o;
            if (o > best_order) {
                best_order = o;
                best = b;
            }
        }
        // Adjust by an element of the current span so the lift has the same order in H.
        std::size_t gen = d;
        for (std::size_t s = 0; s < d && gen == d; ++s) {
            if (!spanned[s]) continue;
            const std::size_t cand = qadd(best, qneg(s));
            if (qmul(cand, best_order) == 0) gen = cand;
        }
        if (gen == d) throw std::logic_error("quotient peeling failed to lift a cyclic factor");

        std::vector<std::size_t> old;
        for (std::size_t h = 0; h < d; ++h) {
            if (spanned[h]) old.push_back(h);
        }
        for (std::size_t h : old) span[h].push_back(0);
        std::size_t mult = 0;
        for (std::size_t c = 1; c < best_order; ++c) {
            mult = qadd(mult, gen);
            for (std::size_t h : old) {
                const std::size_t target = qadd(h, mult);
                span[target] = span[h];
                span[target].back() = static_cast<int>(c);
                spanned[target] = true;
            }
        }
        spanned_count = old.size() * best_order;
        factor_orders.push_back(static_cast<int>(best_order));
    }

    QuotientPresentation q;
    q.parent = g;
    q.subgroup = m;
    q.quotient = factor_orders.empty() ? GroupSpec(std::vector<int>{1}) : GroupSpec(factor_orders);
    std::vector<std::size_t> qindex(d);
    for (std::size_t h = 0; h < d; ++h) {
        qindex[h] = factor_orders.empty() ? 0 : q.quotient.index_of(Element{span[h]});
    }
    q.projection.resize(v);
    for (std::size_t x = 0; x < v; ++x) q.projection[x] = qindex[coset[x]];
    q.reps.assign(d, 0);
    for (std::size_t h = 0; h < d; ++h) q.reps[qindex[h]] = coset_rep[h];
    return q;
}

}  // namespace dfam
