#pragma once

/// The reduced quantum plane M = M_N(C): normal-form arithmetic on linear
/// combinations of x^r y^s with xy = q yx, x^N = y^N = 1, and the concrete
/// matrix realization (x diagonal, y cyclic shift).

#include <qplane/matrix.hpp>

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace qplane {

/// Sparse element of M in the normal-ordered basis x^r y^s. Exponents are
/// always reduced mod N and zero coefficients never stored, so structural
/// equality is semantic equality.
class PlaneElement {
  public:
    using Key = std::pair<int, int>;  // (r, s)

    explicit PlaneElement(CycFieldPtr field) : field_(std::move(field)) {}

    static PlaneElement monomial(const CycFieldPtr& field, int r, int s,
                                 CycScalar coeff) {
        PlaneElement e(field);
        e.add_term(r, s, std::move(coeff));
        return e;
    }
    static PlaneElement monomial(const CycFieldPtr& field, int r, int s) {
        return monomial(field, r, s, field->one());
    }
    static PlaneElement one(const CycFieldPtr& field) {
        return monomial(field, 0, 0);
    }
    static PlaneElement x(const CycFieldPtr& field) {
        return monomial(field, 1, 0);
    }
    static PlaneElement y(const CycFieldPtr& field) {
        return monomial(field, 0, 1);
    }

    const CycFieldPtr& field() const { return field_; }
    const std::map<Key, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int r, int s, const CycScalar& coeff) {
        if (coeff.is_zero()) return;
        const int n = field_->n();
        r %= n;
        if (r < 0) r += n;
        s %= n;
        if (s < 0) s += n;
        auto [it, inserted] = terms_.try_emplace({r, s}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PlaneElement operator+(const PlaneElement& u, const PlaneElement& v) {
        u.check(v);
        PlaneElement r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend PlaneElement operator-(const PlaneElement& u, const PlaneElement& v) {
        u.check(v);
        PlaneElement r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend PlaneElement operator-(const PlaneElement& u) {
        PlaneElement r(u.field_);
        for (const auto& [k, c] : u.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend PlaneElement operator*(const CycScalar& s, const PlaneElement& u) {
        PlaneElement r(u.field_);
        for (const auto& [k, c] : u.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }

    /// Normal-ordered product: y^s x^r = q^{-rs} x^r y^s, exponents mod N.
    friend PlaneElement operator*(const PlaneElement& u, const PlaneElement& v) {
        u.check(v);
        PlaneElement r(u.field_);
        for (const auto& [ku, cu] : u.terms_)
            for (const auto& [kv, cv] : v.terms_) {
                CycScalar swap = u.field_->q_power(
                    -static_cast<long>(ku.second) * kv.first);
                r.add_term(ku.first + kv.first, ku.second + kv.second,
                           swap * cu * cv);
            }
        return r;
    }

    PlaneElement& operator+=(const PlaneElement& v) { return *this = *this + v; }
    PlaneElement& operator-=(const PlaneElement& v) { return *this = *this - v; }
    PlaneElement& operator*=(const PlaneElement& v) { return *this = *this * v; }

    PlaneElement pow(long e) const {
        PlaneElement acc = one(field_);
        PlaneElement base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    friend bool operator==(const PlaneElement& u, const PlaneElement& v) {
        u.check(v);
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const PlaneElement& u, const PlaneElement& v) {
        return !(u == v);
    }

    /// Coordinates in the monomial basis, index r*N + s.
    CycMatrix coordinates() const {
        const int n = field_->n();
        CycMatrix row(field_, 1, n * n);
        for (const auto& [k, c] : terms_) row.at(0, k.first * n + k.second) = c;
        return row;
    }

  private:
    void check(const PlaneElement& v) const {
        if (field_->n() != v.field_->n())
            throw std::invalid_argument("plane element context mismatch");
    }

    CycFieldPtr field_;
    std::map<Key, CycScalar> terms_;
};

inline PlaneElement plane_mul(const PlaneElement& u, const PlaneElement& v) {
    return u * v;
}

using PlaneMatrix = CycMatrix;

namespace detail {

struct RealizeCache {
    CycMatrix x, y;                 // generator matrices
    CycMatrix monomial_to_entries;  // N^2 x N^2, columns indexed r*N+s
    CycMatrix entries_to_monomial;  // exact inverse
};

inline const RealizeCache& realize_cache(const CycFieldPtr& field) {
    static std::map<int, RealizeCache> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(field->n());
    if (it != cache.end()) return it->second;

    const int n = field->n();
    RealizeCache rc;
    rc.x = CycMatrix(field, n, n);
    rc.y = CycMatrix(field, n, n);
    for (int i = 0; i < n; ++i) {
        rc.x.at(i, i) = field->q_power(-i);
        rc.y.at(i, (i + 1) % n) = field->one();
    }
    rc.monomial_to_entries = CycMatrix(field, n * n, n * n);
    for (int r = 0; r < n; ++r) {
        CycMatrix xr = rc.x.pow(r);
        for (int s = 0; s < n; ++s) {
            CycMatrix m = xr * rc.y.pow(s);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    rc.monomial_to_entries.at(i * n + j, r * n + s) =
                        m.at(i, j);
        }
    }
    // The N^2 monomial matrices are linearly independent for primitive q;
    // a singular map here would indicate a root-of-unity bug upstream.
    rc.entries_to_monomial = rc.monomial_to_entries.inverse();
    return cache.emplace(n, std::move(rc)).first->second;
}

}  // namespace detail

inline const PlaneMatrix& x_matrix(const CycFieldPtr& field) {
    return detail::realize_cache(field).x;
}
inline const PlaneMatrix& y_matrix(const CycFieldPtr& field) {
    return detail::realize_cache(field).y;
}

/// Algebra morphism onto M_N: realize(u*v) = realize(u)*realize(v).
inline PlaneMatrix realize(const PlaneElement& u) {
    const auto& rc = detail::realize_cache(u.field());
    const int n = u.field()->n();
    PlaneMatrix m(u.field(), n, n);
    for (const auto& [k, c] : u.terms())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) += c * rc.monomial_to_entries.at(
                                      i * n + j, k.first * n + k.second);
    return m;
}

/// Inverse of realize via the cached exact linear solve.
inline PlaneElement unrealize(const PlaneMatrix& m) {
    const auto& rc = detail::realize_cache(m.field());
    const int n = m.field()->n();
    PlaneElement u(m.field());
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            CycScalar c = m.field()->zero();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    c += rc.entries_to_monomial.at(r * n + s, i * n + j) *
                         m.at(i, j);
            u.add_term(r, s, c);
        }
    return u;
}

}  // namespace qplane
