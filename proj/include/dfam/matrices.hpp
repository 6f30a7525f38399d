#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dfam/algebra.hpp"
#include "dfam/family.hpp"
#include "dfam/group.hpp"

namespace dfam {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix; all verification runs on these.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix ones(std::size_t n) { return IntMatrix(n, n, 1); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_sign_matrix() const;
    bool is_symmetric() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend IntMatrix operator*(std::int64_t s, const IntMatrix& a);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Assembles a grid of equally sized blocks.
IntMatrix block_matrix(const std::vector<std::vector<IntMatrix>>& grid);

/// Mat(A): entry (x, y) is the coefficient of x - y, rows/columns in enumeration order.
IntMatrix regular_rep(const IntAlgebraElement& a);
/// Mat(a_{f_i}) for every block of the family.
std::vector<IntMatrix> family_matrices(const DifferenceFamily& family);

/// r_{x,y} = 1 iff x + y = e.
IntMatrix r_matrix(const GroupSpec& g);

/// Entry (x, y) depends only on x - y.
bool is_group_invariant(const GroupSpec& g, const IntMatrix& a);

enum class GsSigns {
    standard,   ///< the Goethals-Seidel array proper
    symmetric,  ///< same block layout with all signs +; needs R = I and symmetric, mutually annihilating blocks
};

/**
 * Goethals-Seidel array of order 4v. The layout (block index, sign, transpose,
 * right factor R) is one table; the symmetric variant only swaps the sign
 * column, which with R = I and symmetric blocks reproduces the Klein-group
 * matrix [[A0,A1,A2,A3],[A1,A0,A3,A2],[A2,A3,A0,A1],[A3,A2,A1,A0]].
 */
IntMatrix gs_array(const std::array<IntMatrix, 4>& blocks, const IntMatrix& r, GsSigns signs = GsSigns::standard);

/// [[A1, A2], [-A2^T, A1^T]], or [[A1, A2], [A2^T, -A1^T]] when symmetric.
IntMatrix do_array(const IntMatrix& a1, const IntMatrix& a2, bool symmetric);

enum class LegendreKind { symmetric, skew };

/// Bordered array of order 2v + 2 from a Legendre pair.
IntMatrix legendre_array(const IntMatrix& a1, const IntMatrix& a2, LegendreKind kind);

/// [[A2, A1], [A1^T, -A2^T]].
IntMatrix golay_array(const IntMatrix& a1, const IntMatrix& a2);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& a);

/// 2^v (2v-1) (v-1)^(v-1) for a matrix of order 2v.
BigInt ehlich_bound(std::size_t v);

enum class MatrixProperty { hadamard, symmetric, skew, bush, do_bound };

struct MatrixReport {
    std::size_t order = 0;
    bool sign_matrix = false;
    std::optional<bool> hadamard;
    std::optional<bool> symmetric;
    std::optional<bool> skew;
    std::optional<bool> bush;
    std::optional<bool> do_bound;  // |det| equals the bound
    std::optional<BigInt> abs_det;
    std::optional<BigInt> bound;

    bool all_pass() const;
    std::string summary() const;
};

/// Exact checks; `bush_block` is m for order m^2 (0 = take the square root).
MatrixReport verify_matrix(const IntMatrix& h, std::span<const MatrixProperty> properties, std::size_t bush_block = 0);

/// One row per line of '+'/'-', optionally preceded by "order N".
std::string to_text(const IntMatrix& a, bool header = true);
IntMatrix parse_text(std::string_view text);

}  // namespace dfam
