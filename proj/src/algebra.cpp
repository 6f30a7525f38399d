#include "dfam/algebra.hpp"

namespace dfam {

IntAlgebraElement embed_subset(const GroupSpec& g, std::span<const Element> subset) {
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const Element& x : subset) idx.push_back(g.index_of(x));
    return embed_subset(g, idx);
}

IntAlgebraElement embed_subset(const GroupSpec& g, std::span<const std::size_t> subset) {
    IntAlgebraElement out(g);
    for (std::size_t x : subset) {
        if (x >= g.order()) throw DomainError("subset member outside " + g.literal());
        if (out.coeff(x) != 0) throw DomainError("subset lists an element twice");
        out.add_to(x, 1);
    }
    return out;
}

IntAlgebraElement unit_element(const GroupSpec& g) {
    IntAlgebraElement e(g);
    e.add_to(0, 1);
    return e;
}

IntAlgebraElement group_sum(const GroupSpec& g) {
    IntAlgebraElement out(g);
    for (std::size_t x = 0; x < g.order(); ++x) out.add_to(x, 1);
    return out;
}

}  // namespace dfam
