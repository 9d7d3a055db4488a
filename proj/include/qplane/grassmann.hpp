#pragma once

/// The rank-2 Grassmann algebra Gr(2) over Q(q) and the block-matrix model
/// of H: each block is an N x N grid of Grassmann elements with a parity
/// pattern (even on the two diagonal sub-blocks, odd off-diagonal). The
/// model supplies independent dimension predictions (block sizes, radical
/// count) that the intrinsic linear-algebra computations must reproduce.

#include <qplane/cyclotomic.hpp>

#include <stdexcept>
#include <vector>

namespace qplane {

/// c0 + c1 t1 + c2 t2 + c12 t1 t2 with t1^2 = t2^2 = 0, t1 t2 = -t2 t1.
class GrassmannElement {
  public:
    explicit GrassmannElement(const CycFieldPtr& field)
        : c0(field->zero()),
          c1(field->zero()),
          c2(field->zero()),
          c12(field->zero()) {}
    GrassmannElement(CycScalar c0_, CycScalar c1_, CycScalar c2_,
                     CycScalar c12_)
        : c0(std::move(c0_)),
          c1(std::move(c1_)),
          c2(std::move(c2_)),
          c12(std::move(c12_)) {}

    CycScalar c0, c1, c2, c12;

    bool is_zero() const {
        return c0.is_zero() && c1.is_zero() && c2.is_zero() && c12.is_zero();
    }
    /// Even part: span{1, t1 t2}; closed under multiplication.
    bool is_even() const { return c1.is_zero() && c2.is_zero(); }
    /// Odd part: span{t1, t2}.
    bool is_odd() const { return c0.is_zero() && c12.is_zero(); }

    friend GrassmannElement operator+(const GrassmannElement& u,
                                      const GrassmannElement& v) {
        return {u.c0 + v.c0, u.c1 + v.c1, u.c2 + v.c2, u.c12 + v.c12};
    }
    friend GrassmannElement operator-(const GrassmannElement& u,
                                      const GrassmannElement& v) {
        return {u.c0 - v.c0, u.c1 - v.c1, u.c2 - v.c2, u.c12 - v.c12};
    }
    friend GrassmannElement operator*(const GrassmannElement& u,
                                      const GrassmannElement& v) {
        // (t1 t2) t_i = 0 and t2 t1 = -t1 t2 give the four products below.
        return {u.c0 * v.c0, u.c0 * v.c1 + u.c1 * v.c0,
                u.c0 * v.c2 + u.c2 * v.c0,
                u.c0 * v.c12 + u.c12 * v.c0 + u.c1 * v.c2 - u.c2 * v.c1};
    }
    friend bool operator==(const GrassmannElement& u,
                           const GrassmannElement& v) {
        return u.c0 == v.c0 && u.c1 == v.c1 && u.c2 == v.c2 && u.c12 == v.c12;
    }
    friend bool operator!=(const GrassmannElement& u,
                           const GrassmannElement& v) {
        return !(u == v);
    }
};

/// Shape of one block of H: an N x N Grassmann-matrix algebra whose cells
/// are even on the diagonal sub-blocks of sizes (n_even, n_odd) and odd off
/// them. The p = 0 block (n_odd = 0) degenerates to plain N x N matrices.
struct BlockShape {
    int n_even;  // N - p
    int n_odd;   // p

    int size() const { return n_even + n_odd; }

    bool even_cell(int i, int j) const {
        return (i < n_even) == (j < n_even);
    }

    /// Complex dimension: each even cell carries {1, t1 t2}, each odd cell
    /// {t1, t2} — two slots either way — except the p = 0 block, which is
    /// scalar-entried.
    long complex_dimension() const {
        long n = size();
        return n_odd == 0 ? n * n : 2 * n * n;
    }

    /// Dimension of the radical slots: the t1 t2 line in each even cell and
    /// both odd slots in each odd cell; zero for the scalar block.
    long radical_dimension() const {
        if (n_odd == 0) return 0;
        long even_cells = static_cast<long>(n_even) * n_even +
                          static_cast<long>(n_odd) * n_odd;
        long odd_cells = 2L * n_even * n_odd;
        return even_cells + 2 * odd_cells;
    }

    /// Dimension of the semisimple quotient: the scalar slot of each even
    /// cell, i.e. M_{n_even} + M_{n_odd}.
    long semisimple_dimension() const {
        return static_cast<long>(n_even) * n_even +
               static_cast<long>(n_odd) * n_odd;
    }

    bool respects_parity(
        const std::vector<std::vector<GrassmannElement>>& grid) const {
        const int n = size();
        if (static_cast<int>(grid.size()) != n) return false;
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(grid[i].size()) != n) return false;
            for (int j = 0; j < n; ++j) {
                if (n_odd == 0 && !grid[i][j].is_even()) return false;
                if (even_cell(i, j) ? !grid[i][j].is_even()
                                    : !grid[i][j].is_odd())
                    return false;
            }
        }
        return true;
    }
};

/// Product of two parity-respecting Grassmann block matrices; stays
/// parity-respecting (even*even and odd*odd are even, mixed products odd).
inline std::vector<std::vector<GrassmannElement>> grassmann_block_mul(
    const BlockShape& shape, const CycFieldPtr& field,
    const std::vector<std::vector<GrassmannElement>>& a,
    const std::vector<std::vector<GrassmannElement>>& b) {
    const int n = shape.size();
    std::vector<std::vector<GrassmannElement>> r(
        n, std::vector<GrassmannElement>(n, GrassmannElement(field)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

/// The block list of H for context size N: M_N plus M_{N-p|p} for
/// p = 1 … (N-1)/2; total complex dimension N^3.
inline std::vector<BlockShape> block_shapes(int n) {
    std::vector<BlockShape> out;
    long total = 0;
    for (int p = 0; p <= (n - 1) / 2; ++p) {
        BlockShape s{n - p, p};
        total += s.complex_dimension();
        out.push_back(s);
    }
    if (total != static_cast<long>(n) * n * n)
        throw std::logic_error("block dimensions do not sum to N^3");
    return out;
}

}  // namespace qplane
