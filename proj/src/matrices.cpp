#include "dfam/matrices.hpp"

#include <cmath>
#include <sstream>

#include "dfam/error.hpp"

namespace dfam {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool IntMatrix::is_sign_matrix() const {
    for (auto x : data_) {
        if (x != 1 && x != -1) return false;
    }
    return true;
}

bool IntMatrix::is_symmetric() const { return square() && *this == transpose(); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) { return -1 * a; }

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

IntMatrix block_matrix(const std::vector<std::vector<IntMatrix>>& grid) {
    if (grid.empty() || grid.front().empty()) return {};
    const std::size_t br = grid.front().front().rows();
    const std::size_t bc = grid.front().front().cols();
    IntMatrix out(br * grid.size(), bc * grid.front().size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != grid.front().size()) throw ShapeError("ragged block grid");
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            const IntMatrix& b = grid[i][j];
            if (b.rows() != br || b.cols() != bc) throw ShapeError("blocks of unequal size");
            for (std::size_t r = 0; r < br; ++r) {
                for (std::size_t c = 0; c < bc; ++c) out(i * br + r, j * bc + c) = b(r, c);
            }
        }
    }
    return out;
}

IntMatrix regular_rep(const IntAlgebraElement& a) {
    const GroupSpec& g = a.group();
    const std::size_t v = g.order();
    IntMatrix m(v, v);
    for (std::size_t x = 0; x < v; ++x) {
        for (std::size_t y = 0; y < v; ++y) m(x, y) = a.coeff(g.sub(x, y));
    }
    return m;
}

std::vector<IntMatrix> family_matrices(const DifferenceFamily& family) {
    std::vector<IntMatrix> out;
    for (const IntFunction& f : associated_functions(family)) out.push_back(regular_rep(algebra_of_function(f)));
    return out;
}

IntMatrix r_matrix(const GroupSpec& g) {
    const std::size_t v = g.order();
    IntMatrix r(v, v);
    for (std::size_t x = 0; x < v; ++x) r(x, g.negate(x)) = 1;
    return r;
}

bool is_group_invariant(const GroupSpec& g, const IntMatrix& a) {
    const std::size_t v = g.order();
    if (a.rows() != v || a.cols() != v) return false;
    for (std::size_t x = 0; x < v; ++x) {
        for (std::size_t y = 0; y < v; ++y) {
            if (a(x, y) != a(g.sub(x, y), 0)) return false;
        }
    }
    return true;
}

namespace {

IntMatrix gram(const IntMatrix& a) { return a * a.transpose(); }

void require_square_blocks(std::span<const IntMatrix> blocks, std::string_view what) {
    for (const IntMatrix& b : blocks) {
        if (!b.square() || b.rows() != blocks.front().rows()) {
            throw ShapeError(std::string(what) + ": blocks must be square and of equal order");
        }
        if (!b.is_sign_matrix()) throw PreconditionError(std::string(what) + ": blocks must be {+1,-1} matrices");
    }
}

struct GsCell {
    int block;
    int sign;
    bool transpose;
    bool times_r;
};

// clang-format off
constexpr GsCell kGsLayout[4][4] = {
    {{0, +1, false, false}, {1, +1, false, true}, {2, +1, false, true}, {3, +1, false, true}},
    {{1, -1, false, true}, {0, +1, false, false}, {3, -1, true, true}, {2, +1, true, true}},
    {{2, -1, false, true}, {3, +1, true, true}, {0, +1, false, false}, {1, -1, true, true}},
    {{3, -1, false, true}, {2, -1, true, true}, {1, +1, true, true}, {0, +1, false, false}},
};
// clang-format on

}  // namespace

IntMatrix gs_array(const std::array<IntMatrix, 4>& blocks, const IntMatrix& r, GsSigns signs) {
    require_square_blocks(blocks, "GS array");
    const std::size_t v = blocks[0].rows();
    if (r.rows() != v || r.cols() != v) throw ShapeError("GS array: R has the wrong order");
    IntMatrix sum(v, v);
    for (const IntMatrix& a : blocks) sum = sum + gram(a);
    if (!(sum == static_cast<std::int64_t>(4 * v) * IntMatrix::identity(v))) {
        throw PreconditionError("GS array: sum A_i A_i^T != 4v I (not a Goethals-Seidel family)");
    }
    if (signs == GsSigns::symmetric) {
        if (!(r == IntMatrix::identity(v))) throw PreconditionError("symmetric GS specialization needs R = I");
        for (const IntMatrix& a : blocks) {
            if (!a.is_symmetric()) throw PreconditionError("symmetric GS specialization needs symmetric blocks");
        }
    }
    std::vector<std::vector<IntMatrix>> grid(4, std::vector<IntMatrix>(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const GsCell& c = kGsLayout[i][j];
            IntMatrix b = c.transpose ? blocks[c.block].transpose() : blocks[c.block];
            if (c.times_r) b = b * r;
            const int sign = signs == GsSigns::symmetric ? +1 : c.sign;
            grid[i][j] = sign * b;
        }
    }
    IntMatrix h = block_matrix(grid);
    if (signs == GsSigns::symmetric && !(gram(h) == static_cast<std::int64_t>(4 * v) * IntMatrix::identity(4 * v))) {
        throw PreconditionError("symmetric GS specialization needs mutually annihilating blocks (A_i A_j = 0)");
    }
    return h;
}

IntMatrix do_array(const IntMatrix& a1, const IntMatrix& a2, bool symmetric) {
    const std::array<IntMatrix, 2> blocks{a1, a2};
    require_square_blocks(blocks, "DO array");
    const std::size_t v = a1.rows();
    const auto vi = static_cast<std::int64_t>(v);
    const IntMatrix expected = (2 * (vi - 1)) * IntMatrix::identity(v) + 2 * IntMatrix::ones(v);
    if (!(gram(a1) + gram(a2) == expected)) {
        throw PreconditionError("DO array: A1 A1^T + A2 A2^T != 2(v-1) I + 2 J");
    }
    if (symmetric) {
        if (!a1.is_symmetric()) throw PreconditionError("symmetric DO array needs a symmetric first block");
        return block_matrix({{a1, a2}, {a2.transpose(), -a1.transpose()}});
    }
    return block_matrix({{a1, a2}, {-a2.transpose(), a1.transpose()}});
}

IntMatrix legendre_array(const IntMatrix& a1, const IntMatrix& a2, LegendreKind kind) {
    const std::array<IntMatrix, 2> blocks{a1, a2};
    require_square_blocks(blocks, "Legendre array");
    const std::size_t v = a1.rows();
    const auto vi = static_cast<std::int64_t>(v);
    const IntMatrix expected = (2 * (vi + 1)) * IntMatrix::identity(v) - 2 * IntMatrix::ones(v);
    if (!(gram(a1) + gram(a2) == expected)) {
        throw PreconditionError("Legendre array: A1 A1^T + A2 A2^T != 2(v+1) I - 2 J");
    }
    IntMatrix h(2 * v + 2, 2 * v + 2);
    auto fill = [&](const IntMatrix& b, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < v; ++r) {
            for (std::size_t c = 0; c < v; ++c) h(r0 + r, c0 + c) = b(r, c);
        }
    };
    // corner, then the two border rows over the A1 / A2 columns, then the border columns
    std::int64_t corner[2][2];
    std::int64_t top[2][2];   // top[row][column block]
    std::int64_t side[2][2];  // side[row block][column]
    if (kind == LegendreKind::symmetric) {
        if (!a1.is_symmetric()) throw PreconditionError("symmetric Legendre array needs a symmetric first block");
        const std::int64_t c[2][2] = {{-1, -1}, {-1, 1}}, t[2][2] = {{1, 1}, {1, -1}}, s[2][2] = {{1, 1}, {1, -1}};
        std::copy(&c[0][0], &c[0][0] + 4, &corner[0][0]);
        std::copy(&t[0][0], &t[0][0] + 4, &top[0][0]);
        std::copy(&s[0][0], &s[0][0] + 4, &side[0][0]);
        fill(a1, 2, 2);
        fill(a2, 2, 2 + v);
        fill(a2.transpose(), 2 + v, 2);
        fill(-a1.transpose(), 2 + v, 2 + v);
    } else {
        if (!(a1 + a1.transpose() == 2 * IntMatrix::identity(v))) {
            throw PreconditionError("skew Legendre array needs a skew first block (A1 + A1^T = 2I)");
        }
        const std::int64_t c[2][2] = {{1, -1}, {1, 1}}, t[2][2] = {{1, 1}, {1, -1}}, s[2][2] = {{-1, -1}, {-1, 1}};
        std::copy(&c[0][0], &c[0][0] + 4, &corner[0][0]);
        std::copy(&t[0][0], &t[0][0] + 4, &top[0][0]);
        std::copy(&s[0][0], &s[0][0] + 4, &side[0][0]);
        // With this border the second block enters negated (the matrix of G \ X2).
        const IntMatrix b2 = -a2;
        fill(a1, 2, 2);
        fill(b2, 2, 2 + v);
        fill(-b2.transpose(), 2 + v, 2);
        fill(a1.transpose(), 2 + v, 2 + v);
    }
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) h(r, c) = corner[r][c];
        for (std::size_t j = 0; j < v; ++j) {
            h(r, 2 + j) = top[r][0];
            h(r, 2 + v + j) = top[r][1];
        }
    }
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t c = 0; c < 2; ++c) {
            h(2 + i, c) = side[0][c];
            h(2 + v + i, c) = side[1][c];
        }
    }
    return h;
}

IntMatrix golay_array(const IntMatrix& a1, const IntMatrix& a2) {
    const std::array<IntMatrix, 2> blocks{a1, a2};
    require_square_blocks(blocks, "Golay array");
    const std::size_t v = a1.rows();
    if (!(gram(a1) + gram(a2) == static_cast<std::int64_t>(2 * v) * IntMatrix::identity(v))) {
        throw PreconditionError("Golay array: A1 A1^T + A2 A2^T != 2v I");
    }
    return block_matrix({{a2, a1}, {a1.transpose(), -a2.transpose()}});
}

BigInt determinant(const IntMatrix& a) {
    if (!a.square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact division
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt ehlich_bound(std::size_t v) {
    if (v == 0) return 1;
    BigInt b = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(v)) * (2 * v - 1);
    b *= boost::multiprecision::pow(BigInt(v - 1), static_cast<unsigned>(v - 1));
    return b;
}

bool MatrixReport::all_pass() const {
    for (const auto& p : {hadamard, symmetric, skew, bush, do_bound}) {
        if (p && !*p) return false;
    }
    return sign_matrix;
}

std::string MatrixReport::summary() const {
    std::ostringstream os;
    os << "order " << order;
    auto item = [&](const char* name, const std::optional<bool>& p) {
        if (p) os << ", " << name << "=" << (*p ? "pass" : "FAIL");
    };
    item("hadamard", hadamard);
    item("symmetric", symmetric);
    item("skew", skew);
    item("bush", bush);
    item("do_bound", do_bound);
    if (abs_det) os << ", |det|=" << *abs_det;
    if (bound) os << ", bound=" << *bound;
    return os.str();
}

MatrixReport verify_matrix(const IntMatrix& h, std::span<const MatrixProperty> properties, std::size_t bush_block) {
    if (!h.square()) throw ShapeError("verify: matrix is not square");
    MatrixReport r;
    r.order = h.rows();
    r.sign_matrix = h.is_sign_matrix();
    const std::size_t n = h.rows();
    for (MatrixProperty p : properties) {
        switch (p) {
            case MatrixProperty::hadamard:
                r.hadamard = r.sign_matrix && gram(h) == static_cast<std::int64_t>(n) * IntMatrix::identity(n);
                break;
            case MatrixProperty::symmetric:
                r.symmetric = h.is_symmetric();
                break;
            case MatrixProperty::skew:
                r.skew = h + h.transpose() == 2 * IntMatrix::identity(n);
                break;
            case MatrixProperty::bush: {
                std::size_t m = bush_block;
                if (m == 0) m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
                bool ok = m > 0 && m * m == n;
                for (std::size_t bi = 0; ok && bi < m; ++bi) {
                    for (std::size_t bj = 0; ok && bj < m; ++bj) {
                        for (std::size_t i = 0; ok && i < m; ++i) {
                            std::int64_t row = 0, col = 0;
                            for (std::size_t j = 0; j < m; ++j) {
                                row += h(bi * m + i, bj * m + j);
                                col += h(bi * m + j, bj * m + i);
                                if (bi == bj && h(bi * m + i, bj * m + j) != 1) ok = false;
                            }
                            if (bi != bj && (row != 0 || col != 0)) ok = false;
                        }
                    }
                }
                r.bush = ok;
                break;
            }
            case MatrixProperty::do_bound: {
                BigInt d = determinant(h);
                if (d < 0) d = -d;
                r.abs_det = d;
                if (n % 2 == 0) {
                    r.bound = ehlich_bound(n / 2);
                    r.do_bound = d == *r.bound;
                } else {
                    r.do_bound = false;
                }
                break;
            }
        }
    }
    return r;
}

std::string to_text(const IntMatrix& a, bool header) {
    std::string s;
    if (header) s += "order " + std::to_string(a.rows()) + "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto x = a(r, c);
            if (x != 1 && x != -1) throw DomainError("text format holds only +1/-1 entries");
            s += x == 1 ? '+' : '-';
        }
        s += '\n';
    }
    return s;
}

IntMatrix parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> rows;
    std::optional<std::size_t> declared;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("order", 0) == 0) {
            try {
                declared = std::stoul(line.substr(5));
            } catch (const std::exception&) {
                throw ParseError("bad matrix header '" + line + "'");
            }
            continue;
        }
        rows.push_back(line);
    }
    const std::size_t n = rows.size();
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) throw ParseError("matrix text is not square");
        for (std::size_t c = 0; c < n; ++c) {
            const char ch = rows[r][c];
            if (ch != '+' && ch != '-') throw ParseError(std::string("unexpected character '") + ch + "' in matrix text");
            m(r, c) = ch == '+' ? 1 : -1;
        }
    }
    if (declared && *declared != n) throw ParseError("matrix header order does not match row count");
    return m;
}

}  // namespace dfam
