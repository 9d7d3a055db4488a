#pragma once

/// Dense exact matrices over Q(q) and the row-reduction toolkit used by the
/// representation-theoretic computations: rank, kernel, solve, inverse and
/// canonical subspace bases. Everything pivots on exact zero tests, never on
/// magnitude.

#include <qplane/cyclotomic.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace qplane {

class CycMatrix {
  public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(CycFieldPtr field, int rows, int cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, field_->zero()) {}

    static CycMatrix identity(const CycFieldPtr& field, int n) {
        CycMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CycFieldPtr& field() const { return field_; }

    CycScalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const CycScalar& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        CycMatrix r(a.field_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
        CycMatrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }

    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
        CycMatrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }

    friend CycMatrix operator*(const CycScalar& s, const CycMatrix& a) {
        CycMatrix r = a;
        for (auto& x : r.a_) x = s * x;
        return r;
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) {
        return !(a == b);
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    CycMatrix transpose() const {
        CycMatrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    CycMatrix pow(long e) const {
        CycMatrix acc = identity(field_, rows_);
        CycMatrix base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    CycScalar trace() const {
        CycScalar t = field_->zero();
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
            CycScalar inv = at(row, col).inv();
            for (int j = col; j < cols_; ++j) at(row, j) = inv * at(row, j);
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                CycScalar f = at(r, col);
                for (int j = col; j < cols_; ++j)
                    at(r, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        CycMatrix tmp = *this;
        return static_cast<int>(tmp.rref().size());
    }

    CycScalar det() const {
        if (rows_ != cols_) throw std::invalid_argument("det of non-square");
        CycMatrix m = *this;
        CycScalar d = field_->one();
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int r = col; r < rows_; ++r)
                if (!m.at(r, col).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return field_->zero();
            if (p != col) {
                for (int j = 0; j < cols_; ++j)
                    std::swap(m.at(p, j), m.at(col, j));
                d = -d;
            }
            d *= m.at(col, col);
            CycScalar inv = m.at(col, col).inv();
            for (int r = col + 1; r < rows_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                CycScalar f = m.at(r, col) * inv;
                for (int j = col; j < cols_; ++j)
                    m.at(r, j) -= f * m.at(col, j);
            }
        }
        return d;
    }

    /// Basis of the right null space, one vector per row of the result.
    CycMatrix kernel_basis() const {
        CycMatrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int p : pivots) is_pivot[p] = true;
        CycMatrix ker(field_, cols_ - static_cast<int>(pivots.size()), cols_);
        int k = 0;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            ker.at(k, free) = field_->one();
            for (std::size_t r = 0; r < pivots.size(); ++r)
                ker.at(k, pivots[r]) = -m.at(static_cast<int>(r), free);
            ++k;
        }
        return ker;
    }

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<CycMatrix> solve(const CycMatrix& b) const {
        CycMatrix aug(field_, rows_, cols_ + b.cols());
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            for (int j = 0; j < b.cols(); ++j)
                aug.at(i, cols_ + j) = b.at(i, j);
        }
        std::vector<int> pivots = aug.rref();
        for (int p : pivots)
            if (p >= cols_) return std::nullopt;
        CycMatrix x(field_, cols_, b.cols());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (int j = 0; j < b.cols(); ++j)
                x.at(pivots[r], j) = aug.at(static_cast<int>(r), cols_ + j);
        return x;
    }

    CycMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
        auto x = solve(identity(field_, rows_));
        if (!x || x->rows() != rows_)
            throw std::domain_error("matrix is singular");
        // solve() found a preimage for every unit vector; with full pivot
        // count that is the two-sided inverse.
        CycMatrix check = *this * *x;
        if (check != identity(field_, rows_))
            throw std::domain_error("matrix is singular");
        return *x;
    }

  private:
    CycFieldPtr field_;
    int rows_, cols_;
    std::vector<CycScalar> a_;
};

/// A subspace of Q(q)^n held in canonical (rref) basis form, so that two
/// subspaces are equal iff their representations are equal.
class Subspace {
  public:
    Subspace() = default;
    /// Rows of `vectors` span the subspace.
    explicit Subspace(CycMatrix vectors) : basis_(std::move(vectors)) {
        std::vector<int> pivots = basis_.rref();
        CycMatrix trimmed(basis_.field(), static_cast<int>(pivots.size()),
                          basis_.cols());
        for (int i = 0; i < trimmed.rows(); ++i)
            for (int j = 0; j < basis_.cols(); ++j)
                trimmed.at(i, j) = basis_.at(i, j);
        basis_ = std::move(trimmed);
    }

    int dim() const { return basis_.rows(); }
    int ambient_dim() const { return basis_.cols(); }
    const CycMatrix& basis() const { return basis_; }

    bool contains(const CycMatrix& row_vector) const {
        CycMatrix stacked(basis_.field(), basis_.rows() + 1, basis_.cols());
        for (int i = 0; i < basis_.rows(); ++i)
            for (int j = 0; j < basis_.cols(); ++j)
                stacked.at(i, j) = basis_.at(i, j);
        for (int j = 0; j < basis_.cols(); ++j)
            stacked.at(basis_.rows(), j) = row_vector.at(0, j);
        return stacked.rank() == dim();
    }

    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i) {
            CycMatrix row(basis_.field(), 1, basis_.cols());
            for (int j = 0; j < basis_.cols(); ++j)
                row.at(0, j) = other.basis_.at(i, j);
            if (!contains(row)) return false;
        }
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) {
        return !(a == b);
    }

    /// Coordinates of `row_vector` in the canonical basis; throws if the
    /// vector lies outside the subspace. Because the basis is in rref, the
    /// coordinate along basis row i is just the entry at its pivot column.
    CycMatrix coordinates(const CycMatrix& row_vector) const {
        CycMatrix coords(basis_.field(), 1, dim());
        CycMatrix residual = row_vector;
        for (int i = 0; i < dim(); ++i) {
            int piv = -1;
            for (int j = 0; j < basis_.cols(); ++j)
                if (!basis_.at(i, j).is_zero()) {
                    piv = j;
                    break;
                }
            coords.at(0, i) = row_vector.at(0, piv);
            for (int j = 0; j < basis_.cols(); ++j)
                residual.at(0, j) -= coords.at(0, i) * basis_.at(i, j);
        }
        if (!residual.is_zero())
            throw std::domain_error("vector outside subspace");
        return coords;
    }

  private:
    CycMatrix basis_;
};

/// Matrix of `op` (acting on column vectors of the ambient space) restricted
/// to the invariant subspace `s`, in the coordinates of s's canonical basis;
/// throws if s is not op-invariant.
inline CycMatrix restrict_operator(const Subspace& s, const CycMatrix& op) {
    const int d = s.dim();
    const int n = s.ambient_dim();
    CycMatrix r(op.field(), d, d);
    for (int i = 0; i < d; ++i) {
        CycMatrix image(op.field(), 1, n);
        for (int j = 0; j < n; ++j) {
            CycScalar acc = op.field()->zero();
            for (int k = 0; k < n; ++k) {
                if (op.at(j, k).is_zero()) continue;
                acc += op.at(j, k) * s.basis().at(i, k);
            }
            image.at(0, j) = acc;
        }
        CycMatrix coords = s.coordinates(image);
        for (int j = 0; j < d; ++j) r.at(j, i) = coords.at(0, j);
    }
    return r;
}

/// Smallest subspace containing `seed` (rows) and stable under every
/// operator in `ops` (acting on column vectors; rows are applied as op * v).
inline Subspace span_closure(const CycMatrix& seed,
                             const std::vector<CycMatrix>& ops) {
    Subspace cur(seed);
    for (;;) {
        const int n = cur.ambient_dim();
        CycMatrix next(seed.field(), cur.dim() * (static_cast<int>(ops.size()) + 1), n);
        int r = 0;
        for (int i = 0; i < cur.dim(); ++i, ++r)
            for (int j = 0; j < n; ++j) next.at(r, j) = cur.basis().at(i, j);
        for (const auto& op : ops)
            for (int i = 0; i < cur.dim(); ++i, ++r)
                for (int j = 0; j < n; ++j) {
                    CycScalar acc = seed.field()->zero();
                    for (int k = 0; k < n; ++k) {
                        if (op.at(j, k).is_zero()) continue;
                        acc += op.at(j, k) * cur.basis().at(i, k);
                    }
                    next.at(r, j) = acc;
                }
        Subspace grown(next);
        if (grown.dim() == cur.dim()) return grown;
        cur = std::move(grown);
    }
}

}  // namespace qplane
