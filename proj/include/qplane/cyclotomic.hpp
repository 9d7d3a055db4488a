#pragma once

/// Exact arithmetic in the cyclotomic field Q(q), q a fixed primitive N-th
/// root of unity with N odd. Elements are residues in Q[t]/(Phi_N(t)) with
/// t identified with q; the stored representative always has degree < phi(N).

#include <qplane/rational.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qplane {

namespace detail {

/// Dense polynomial over Q, coefficient of t^i at index i. Trailing zeros
/// are trimmed so degree() is honest.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

/// Exact division, quotient only; remainder must come out zero when used
/// for cyclotomic factor removal.
inline Poly poly_divmod(Poly num, const Poly& den, Poly* rem_out = nullptr) {
    if (den.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
              Rational(0));
    const Rational lead = den.back();
    while (poly_deg(num) >= poly_deg(den)) {
        int shift = poly_deg(num) - poly_deg(den);
        Rational c = num.back() / lead;
        quot[shift] += c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    if (rem_out) *rem_out = num;
    poly_trim(quot);
    return quot;
}

/// Phi_n by removing every lower cyclotomic factor from t^n - 1.
inline Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly rem;
        p = poly_divmod(p, cyclotomic_poly(d, memo), &rem);
        if (!rem.empty())
            throw std::logic_error("cyclotomic factorization left a remainder");
    }
    memo[n] = p;
    return p;
}

}  // namespace detail

class CycScalar;

/// Field context: fixes N, Phi_N and hence the class of q. One context per
/// computation; immutable after construction, safe to share across threads.
class CycField : public std::enable_shared_from_this<CycField> {
  public:
    /// Rejects even N (the constructions need q^2 != 1 and the matrix
    /// realization needs primitivity) and N < 3.
    static std::shared_ptr<const CycField> make(int n) {
        if (n < 3) throw std::invalid_argument("N must be >= 3");
        if (n % 2 == 0) throw std::invalid_argument("N must be odd");
        return std::shared_ptr<const CycField>(new CycField(n));
    }

    int n() const { return n_; }
    int degree() const { return degree_; }  // phi(N)
    const detail::Poly& modulus() const { return phi_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_rational(const Rational& r) const;
    CycScalar from_int(long v) const;
    /// q^k for any integer k (negative exponents wrap modulo N).
    CycScalar q_power(long k) const;
    CycScalar q() const;

    /// The recurring coefficient 1 + q^{-2} + ... + q^{-2(n-1)}; equals
    /// (1 - q^{-2n})/(1 - q^{-2}) exactly. n >= 0.
    CycScalar q_bracket(long n) const;

    /// Reduces an arbitrary-degree coefficient vector modulo Phi_N.
    std::vector<Rational> reduce(std::vector<Rational> c) const;

  private:
    explicit CycField(int n) : n_(n) {
        std::map<int, detail::Poly> memo;
        phi_ = detail::cyclotomic_poly(n, memo);
        degree_ = detail::poly_deg(phi_);
        // t^k mod Phi for k = degree .. 2*degree-2, used by multiplication.
        detail::Poly cur(degree_ + 1, Rational(0));
        cur[degree_] = 1;
        for (int k = degree_; k <= 2 * degree_ - 2; ++k) {
            detail::Poly rem;
            detail::poly_divmod(cur, phi_, &rem);
            rem.resize(degree_, Rational(0));
            power_table_.push_back(rem);
            cur.insert(cur.begin(), Rational(0));
        }
    }

    int n_;
    int degree_;
    detail::Poly phi_;
    std::vector<detail::Poly> power_table_;  // t^{degree+i} reduced
};

using CycFieldPtr = std::shared_ptr<const CycField>;

/// make_root(N): the entry point fixing the field of scalars.
inline CycFieldPtr make_root(int n) { return CycField::make(n); }

/// One element of Q(q). Value type; arithmetic requires both operands to
/// come from the same context (same N).
class CycScalar {
  public:
    CycScalar() = default;
    CycScalar(CycFieldPtr field, std::vector<Rational> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        c_.resize(field_->degree(), Rational(0));
    }

    const CycFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Nonzero only when the element lies in Q; then returns that rational.
    bool as_rational(Rational* out) const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        if (out) *out = c_.empty() ? Rational(0) : c_[0];
        return true;
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        a.check(b);
        std::vector<Rational> r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return CycScalar(a.field_, std::move(r));
    }

    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        a.check(b);
        std::vector<Rational> r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return CycScalar(a.field_, std::move(r));
    }

    friend CycScalar operator-(const CycScalar& a) {
        std::vector<Rational> r = a.c_;
        for (auto& x : r) x = -x;
        return CycScalar(a.field_, std::move(r));
    }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        a.check(b);
        const int d = a.field_->degree();
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (int i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return CycScalar(a.field_, a.field_->reduce(std::move(conv)));
    }

    friend CycScalar operator*(const Rational& r, const CycScalar& a) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= r;
        return CycScalar(a.field_, std::move(c));
    }

    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    /// Multiplicative inverse via extended Euclid in Q[t]; inv(0) throws.
    CycScalar inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // Bezout: u*self + v*Phi = gcd (a unit, since Phi is irreducible).
        detail::Poly r0 = field_->modulus(), r1 = c_;
        detail::poly_trim(r1);
        detail::Poly s0 = {}, s1 = {Rational(1)};  // coefficients of self
        while (detail::poly_deg(r1) > 0) {
            detail::Poly rem;
            detail::Poly quot = detail::poly_divmod(r0, r1, &rem);
            detail::Poly qs = detail::poly_mul(quot, s1);
            detail::Poly s2 = s0;
            s2.resize(std::max(s2.size(), qs.size()), Rational(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::poly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty())
            throw std::logic_error("modulus not coprime to element");
        Rational unit = r1[0];
        for (auto& x : s1) x /= unit;
        s1.resize(field_->degree(), Rational(0));
        return CycScalar(field_, std::move(s1));
    }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
        return a * b.inv();
    }

    CycScalar pow(long e) const {
        CycScalar base = *this;
        if (e < 0) {
            base = base.inv();
            e = -e;
        }
        CycScalar acc = field_->one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) {
        return !(a == b);
    }

    /// Canonical text form: rational-coefficient polynomial in q of degree
    /// < phi(N), e.g. "1/2 + 3*q - q^2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            bool neg = a < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = neg ? Rational(-a) : a;
            std::string power =
                i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
            if (power.empty())
                out += to_string(mag);
            else if (mag == 1)
                out += power;
            else
                out += to_string(mag) + "*" + power;
        }
        return out;
    }

  private:
    void check(const CycScalar& b) const {
        if (!field_ || !b.field_ || field_->n() != b.field_->n())
            throw std::invalid_argument("scalar context mismatch");
    }

    CycFieldPtr field_;
    std::vector<Rational> c_;
};

inline CycScalar CycField::zero() const {
    return CycScalar(shared_from_this(), {});
}

inline CycScalar CycField::one() const { return from_int(1); }

inline CycScalar CycField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return CycScalar(shared_from_this(), std::move(c));
}

inline CycScalar CycField::from_int(long v) const {
    return from_rational(Rational(v));
}

inline CycScalar CycField::q_power(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    return CycScalar(shared_from_this(), reduce(std::move(c)));
}

inline CycScalar CycField::q() const { return q_power(1); }

inline CycScalar CycField::q_bracket(long n) const {
    if (n < 0) throw std::invalid_argument("q_bracket needs n >= 0");
    CycScalar acc = zero();
    for (long i = 0; i < n; ++i) acc += q_power(-2 * i);
    return acc;
}

inline std::vector<Rational> CycField::reduce(std::vector<Rational> c) const {
    if (detail::poly_deg(c) > 2 * degree_ - 2) {
        // Beyond the precomputed table (only large-N one-off powers land
        // here); fall back to full division.
        detail::Poly rem;
        detail::poly_divmod(c, phi_, &rem);
        rem.resize(degree_, Rational(0));
        return rem;
    }
    c.resize(std::max<std::size_t>(c.size(), degree_), Rational(0));
    for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(degree_);) {
        if (c[k] == 0) continue;
        const detail::Poly& sub = power_table_[k - degree_];
        for (int i = 0; i < degree_; ++i) c[i] += c[k] * sub[i];
        c[k] = 0;
    }
    c.resize(degree_);
    return c;
}

}  // namespace qplane
