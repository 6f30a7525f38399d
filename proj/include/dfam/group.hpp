#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dfam {

/// A group element as a residue vector, one coordinate per cyclic factor.
struct Element {
    std::vector<int> residues;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/**
 * A finite abelian group Z_{m_1} x ... x Z_{m_r}, written additively.
 *
 * Elements are addressed either as residue vectors or by their rank in
 * lexicographic order (last coordinate varies fastest). The rank order is the
 * canonical row/column order of every vector and matrix in the library, and
 * the index arithmetic below is what the hot loops use.
 */
class GroupSpec {
public:
    GroupSpec() : GroupSpec(std::vector<int>{1}) {}
    explicit GroupSpec(std::vector<int> orders);

    const std::vector<int>& orders() const noexcept { return orders_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return orders_.size(); }

    bool contains(const Element& x) const noexcept;
    std::size_t index_of(const Element& x) const;
    Element element_at(std::size_t index) const;

    std::size_t add(std::size_t a, std::size_t b) const noexcept;
    std::size_t negate(std::size_t a) const noexcept;
    std::size_t sub(std::size_t a, std::size_t b) const noexcept { return add(a, negate(b)); }
    /// Coordinate k of the element with the given index.
    int digit(std::size_t index, std::size_t k) const noexcept {
        return static_cast<int>((index / strides_[k]) % static_cast<std::size_t>(orders_[k]));
    }

    /// "Z3xZ6" style literal.
    std::string literal() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept { return a.orders_ == b.orders_; }

private:
    std::vector<int> orders_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
};

GroupSpec make_group(std::span<const int> orders);
/// Accepts "Z3xZ6", "Z18", "3x6", or a JSON-ish list "[3,6]".
GroupSpec parse_group_literal(std::string_view text);

/// Builds an element, reducing each coordinate into [0, m_k).
Element make_element(const GroupSpec& g, std::span<const int> residues);

Element compose(const GroupSpec& g, const Element& x, const Element& y);
Element inverse(const GroupSpec& g, const Element& x);
Element identity(const GroupSpec& g);

/// All elements in lexicographic order.
std::vector<Element> enumerate(const GroupSpec& g);

/// Order of the element with the given index.
std::size_t element_order(const GroupSpec& g, std::size_t index);

struct Subgroup {
    GroupSpec parent;
    std::vector<std::size_t> members;  // sorted element indices

    std::size_t order() const noexcept { return members.size(); }
    bool contains(std::size_t index) const;
};

/// Smallest subgroup containing the generators.
Subgroup subgroup_generate(const GroupSpec& g, std::span<const Element> gens);
/// Validates an explicit member list; throws InvalidSubgroupError unless it is a subgroup.
Subgroup make_subgroup(const GroupSpec& g, std::span<const Element> members);

/**
 * G/M presented as a product of cyclic groups.
 *
 * `projection[i]` is the quotient index of the image of element i of G;
 * `reps[h]` is the lexicographically smallest element of the fiber over h.
 */
struct QuotientPresentation {
    GroupSpec parent;
    Subgroup subgroup;
    GroupSpec quotient;
    std::vector<std::size_t> projection;
    std::vector<std::size_t> reps;

    std::size_t project(std::size_t index) const { return projection.at(index); }
    Element project(const Element& x) const;
};

QuotientPresentation quotient(const GroupSpec& g, const Subgroup& m);

}  // namespace dfam
