#pragma once

/// The finite-dimensional quantum group H: linear basis K^a X+^b X-^c with
/// K^N = 1, X+^N = X-^N = 0, K X± = q^{±2} X± K and
/// [X+, X-] = (K - K^{-1})/(q - q^{-1}); product normal forms, coproduct,
/// counit and antipode.

#include <qplane/cyclotomic.hpp>

#include <array>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace qplane {

class HElement {
  public:
    using Key = std::array<int, 3>;  // (K-power, X+-power, X--power)

    explicit HElement(CycFieldPtr field) : field_(std::move(field)) {}

    static HElement monomial(const CycFieldPtr& field, int a, int b, int c,
                             CycScalar coeff) {
        HElement e(field);
        e.add_term(a, b, c, std::move(coeff));
        return e;
    }
    static HElement monomial(const CycFieldPtr& field, int a, int b, int c) {
        return monomial(field, a, b, c, field->one());
    }
    static HElement one(const CycFieldPtr& field) {
        return monomial(field, 0, 0, 0);
    }
    static HElement k(const CycFieldPtr& field) {
        return monomial(field, 1, 0, 0);
    }
    static HElement k_inv(const CycFieldPtr& field) {
        return monomial(field, field->n() - 1, 0, 0);
    }
    static HElement x_plus(const CycFieldPtr& field) {
        return monomial(field, 0, 1, 0);
    }
    static HElement x_minus(const CycFieldPtr& field) {
        return monomial(field, 0, 0, 1);
    }

    const CycFieldPtr& field() const { return field_; }
    const std::map<Key, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// K-power reduced mod N; any X± power outside 0..N-1 annihilates the
    /// term (nilpotency of the quotient).
    void add_term(int a, int b, int c, const CycScalar& coeff) {
        if (coeff.is_zero()) return;
        const int n = field_->n();
        if (b < 0 || b >= n || c < 0 || c >= n) return;
        a %= n;
        if (a < 0) a += n;
        auto [it, inserted] = terms_.try_emplace(Key{a, b, c}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HElement operator+(const HElement& u, const HElement& v) {
        u.check(v);
        HElement r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k[0], k[1], k[2], c);
        return r;
    }
    friend HElement operator-(const HElement& u, const HElement& v) {
        u.check(v);
        HElement r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k[0], k[1], k[2], -c);
        return r;
    }
    friend HElement operator-(const HElement& u) {
        HElement r(u.field_);
        for (const auto& [k, c] : u.terms_) r.add_term(k[0], k[1], k[2], -c);
        return r;
    }
    friend HElement operator*(const CycScalar& s, const HElement& u) {
        HElement r(u.field_);
        for (const auto& [k, c] : u.terms_) r.add_term(k[0], k[1], k[2], s * c);
        return r;
    }

    friend HElement operator*(const HElement& u, const HElement& v);

    HElement& operator+=(const HElement& v) { return *this = *this + v; }
    HElement& operator-=(const HElement& v) { return *this = *this - v; }
    HElement& operator*=(const HElement& v) { return *this = *this * v; }

    HElement pow(long e) const {
        HElement acc = one(field_);
        HElement base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    friend bool operator==(const HElement& u, const HElement& v) {
        u.check(v);
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const HElement& u, const HElement& v) {
        return !(u == v);
    }

    void check(const HElement& v) const {
        if (field_->n() != v.field_->n())
            throw std::invalid_argument("H element context mismatch");
    }

  private:
    CycFieldPtr field_;
    std::map<Key, CycScalar> terms_;
};

namespace detail {

/// monomial * K^m in one step: X±-powers commute past K with phases,
/// X+^b K^m = q^{-2bm} K^m X+^b and X-^c K^m = q^{2cm} K^m X-^c.
inline HElement h_rmul_k(const CycFieldPtr& field, const HElement::Key& t,
                         int m) {
    CycScalar phase = field->q_power(2L * m * (t[2] - t[1]));
    return HElement::monomial(field, t[0] + m, t[1], t[2], phase);
}

inline HElement h_rmul_xminus(const CycFieldPtr& field, const HElement& u) {
    HElement r(field);
    for (const auto& [t, c] : u.terms()) r.add_term(t[0], t[1], t[2] + 1, c);
    return r;
}

/// monomial * X+, rewriting X-^c X+ = X-^{c-1} X+ X- - X-^{c-1} C with
/// C = (K - K^{-1})/(q - q^{-1}); recursion terminates because the
/// X--power of the left factor strictly decreases.
inline HElement h_rmul_xplus(const CycFieldPtr& field, const HElement::Key& t,
                             const CycScalar& coeff) {
    if (t[2] == 0)
        return HElement::monomial(field, t[0], t[1] + 1, t[2], coeff);
    HElement::Key head{t[0], t[1], t[2] - 1};
    HElement first = h_rmul_xminus(field, h_rmul_xplus(field, head, coeff));
    CycScalar comm_inv = (field->q() - field->q_power(-1)).inv();
    HElement second =
        (coeff * comm_inv) *
        (h_rmul_k(field, head, 1) - h_rmul_k(field, head, field->n() - 1));
    return first - second;
}

/// Product of two basis monomials in normal form.
inline HElement h_mono_mul(const CycFieldPtr& field, const HElement::Key& a,
                           const HElement::Key& b) {
    static std::map<std::tuple<int, HElement::Key, HElement::Key>, HElement>
        cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({field->n(), a, b});
        if (it != cache.end()) return it->second;
    }
    HElement res = h_rmul_k(field, a, b[0]);
    for (int i = 0; i < b[1]; ++i) {
        HElement next(field);
        for (const auto& [t, c] : res.terms())
            next += h_rmul_xplus(field, t, c);
        res = std::move(next);
    }
    for (int i = 0; i < b[2]; ++i) res = h_rmul_xminus(field, res);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_tuple(field->n(), a, b), res)
        .first->second;
}

}  // namespace detail

inline HElement operator*(const HElement& u, const HElement& v) {
    u.check(v);
    HElement r(u.field());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            HElement prod = detail::h_mono_mul(u.field(), ku, kv);
            r += (cu * cv) * prod;
        }
    return r;
}

inline HElement h_mul(const HElement& u, const HElement& v) { return u * v; }

/// Element of H (x) H, same reduction rules in each tensor leg.
class HTensor {
  public:
    using Key = std::pair<HElement::Key, HElement::Key>;

    explicit HTensor(CycFieldPtr field) : field_(std::move(field)) {}

    static HTensor simple(const HElement& left, const HElement& right) {
        HTensor t(left.field());
        for (const auto& [kl, cl] : left.terms())
            for (const auto& [kr, cr] : right.terms())
                t.add_term(kl, kr, cl * cr);
        return t;
    }

    const CycFieldPtr& field() const { return field_; }
    const std::map<Key, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const HElement::Key& l, const HElement::Key& r,
                  const CycScalar& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{l, r}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HTensor operator+(const HTensor& u, const HTensor& v) {
        HTensor r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend HTensor operator-(const HTensor& u, const HTensor& v) {
        HTensor r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend HTensor operator*(const CycScalar& s, const HTensor& u) {
        HTensor r(u.field_);
        for (const auto& [k, c] : u.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }

    /// Componentwise algebra structure on H (x) H.
    friend HTensor operator*(const HTensor& u, const HTensor& v) {
        HTensor r(u.field_);
        for (const auto& [ku, cu] : u.terms_)
            for (const auto& [kv, cv] : v.terms_) {
                HElement left =
                    detail::h_mono_mul(u.field_, ku.first, kv.first);
                HElement right =
                    detail::h_mono_mul(u.field_, ku.second, kv.second);
                CycScalar c = cu * cv;
                for (const auto& [kl, cl] : left.terms())
                    for (const auto& [kr, cr] : right.terms())
                        r.add_term(kl, kr, c * cl * cr);
            }
        return r;
    }

    HTensor& operator*=(const HTensor& v) { return *this = *this * v; }

    friend bool operator==(const HTensor& u, const HTensor& v) {
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const HTensor& u, const HTensor& v) {
        return !(u == v);
    }

  private:
    CycFieldPtr field_;
    std::map<Key, CycScalar> terms_;
};

/// Delta, the algebra morphism with Delta K = K (x) K,
/// Delta X+ = X+ (x) 1 + K (x) X+, Delta X- = X- (x) K^{-1} + 1 (x) X-.
inline HTensor h_coproduct(const HElement& u) {
    const CycFieldPtr& f = u.field();
    HTensor dk = HTensor::simple(HElement::k(f), HElement::k(f));
    HTensor dxp = HTensor::simple(HElement::x_plus(f), HElement::one(f)) +
                  HTensor::simple(HElement::k(f), HElement::x_plus(f));
    HTensor dxm = HTensor::simple(HElement::x_minus(f), HElement::k_inv(f)) +
                  HTensor::simple(HElement::one(f), HElement::x_minus(f));
    HTensor res(f);
    for (const auto& [t, c] : u.terms()) {
        HTensor acc = HTensor::simple(HElement::one(f), HElement::one(f));
        for (int i = 0; i < t[0]; ++i) acc *= dk;
        for (int i = 0; i < t[1]; ++i) acc *= dxp;
        for (int i = 0; i < t[2]; ++i) acc *= dxm;
        res = res + c * acc;
    }
    return res;
}

/// eps(K) = 1, eps(X±) = 0, extended as an algebra morphism.
inline CycScalar h_counit(const HElement& u) {
    CycScalar r = u.field()->zero();
    for (const auto& [t, c] : u.terms())
        if (t[1] == 0 && t[2] == 0) r += c;
    return r;
}

/// S(K) = K^{-1}, S(X+) = -K^{-1} X+, S(X-) = -X- K, extended as an
/// algebra anti-morphism. The formulas are the standard ones for the
/// quotient; the Hopf axioms certify them (see tests).
inline HElement h_antipode(const HElement& u) {
    const CycFieldPtr& f = u.field();
    HElement sk = HElement::k_inv(f);
    HElement sxp = -(HElement::k_inv(f) * HElement::x_plus(f));
    HElement sxm = -(HElement::x_minus(f) * HElement::k(f));
    HElement res(f);
    for (const auto& [t, c] : u.terms()) {
        HElement acc = HElement::one(f);
        // anti-morphism: reverse the factor order of K^a X+^b X-^c
        for (int i = 0; i < t[2]; ++i) acc *= sxm;
        for (int i = 0; i < t[1]; ++i) acc *= sxp;
        for (int i = 0; i < t[0]; ++i) acc *= sk;
        res += c * acc;
    }
    return res;
}

}  // namespace qplane
