#pragma once

/// The left action of H on the reduced quantum plane M, both through the
/// closed generator formulas and (as an independent oracle) through the
/// F-coaction and the pairing; module-algebra verification.

#include <qplane/dual.hpp>
#include <qplane/plane.hpp>

namespace qplane {

namespace detail {

/// K[x^r y^s] = q^{r-s} x^r y^s
inline PlaneElement act_k(const PlaneElement& m) {
    PlaneElement out(m.field());
    for (const auto& [k, c] : m.terms())
        out.add_term(k.first, k.second,
                     m.field()->q_power(k.first - k.second) * c);
    return out;
}

/// X+[x^r y^s] = q^r [s]_{q^{-2}} x^{r+1} y^{s-1}; exponents wrap mod N,
/// and the bracket vanishes exactly when s = 0.
inline PlaneElement act_xplus(const PlaneElement& m) {
    PlaneElement out(m.field());
    for (const auto& [k, c] : m.terms()) {
        CycScalar coeff = m.field()->q_power(k.first) *
                          m.field()->q_bracket(k.second) * c;
        out.add_term(k.first + 1, k.second - 1, coeff);
    }
    return out;
}

/// X-[x^r y^s] = q^s [r]_{q^{-2}} x^{r-1} y^{s+1}
inline PlaneElement act_xminus(const PlaneElement& m) {
    PlaneElement out(m.field());
    for (const auto& [k, c] : m.terms()) {
        CycScalar coeff = m.field()->q_power(k.second) *
                          m.field()->q_bracket(k.first) * c;
        out.add_term(k.first - 1, k.second + 1, coeff);
    }
    return out;
}

}  // namespace detail

/// act(h1 h2, m) = act(h1, act(h2, m)); a basis monomial K^a X+^b X-^c acts
/// as K applied a times after X+ applied b times after X- applied c times.
inline PlaneElement act(const HElement& h, const PlaneElement& m) {
    if (h.field()->n() != m.field()->n())
        throw std::invalid_argument("action context mismatch");
    PlaneElement out(m.field());
    for (const auto& [t, c] : h.terms()) {
        PlaneElement cur = m;
        for (int i = 0; i < t[2]; ++i) cur = detail::act_xminus(cur);
        for (int i = 0; i < t[1]; ++i) cur = detail::act_xplus(cur);
        for (int i = 0; i < t[0]; ++i) cur = detail::act_k(cur);
        out += c * cur;
    }
    return out;
}

namespace detail {

/// Element of M (x) F with componentwise multiplication; just enough for
/// the coaction oracle.
struct MFTensor {
    CycFieldPtr field;
    std::map<std::pair<PlaneElement::Key, FElement::Key>, CycScalar> terms;

    void add(const PlaneElement::Key& m, const FElement::Key& f,
             const CycScalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms.try_emplace({m, f}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    MFTensor mul(const MFTensor& o) const {
        MFTensor r{field, {}};
        for (const auto& [ku, cu] : terms)
            for (const auto& [kv, cv] : o.terms) {
                PlaneElement pm =
                    PlaneElement::monomial(field, ku.first.first,
                                           ku.first.second) *
                    PlaneElement::monomial(field, kv.first.first,
                                           kv.first.second);
                FElement fm = FElement::monomial(field, ku.second[0],
                                                 ku.second[1], ku.second[2]) *
                              FElement::monomial(field, kv.second[0],
                                                 kv.second[1], kv.second[2]);
                CycScalar c = cu * cv;
                for (const auto& [km, cm] : pm.terms())
                    for (const auto& [kf, cf] : fm.terms())
                        r.add(km, kf, c * cm * cf);
            }
        return r;
    }
};

/// Right coaction delta_R: x -> x(x)a + y(x)c, y -> x(x)b + y(x)d,
/// extended multiplicatively.
inline MFTensor coaction(const PlaneElement& m) {
    const CycFieldPtr& f = m.field();
    MFTensor dx{f, {}};
    dx.add({1, 0}, {1, 0, 0}, f->one());
    dx.add({0, 1}, {0, 0, 1}, f->one());
    MFTensor dy{f, {}};
    dy.add({1, 0}, {0, 1, 0}, f->one());
    FElement d = FElement::d(f);
    for (const auto& [t, c] : d.terms()) dy.add({0, 1}, t, c);
    MFTensor res{f, {}};
    for (const auto& [k, c] : m.terms()) {
        MFTensor acc{f, {}};
        acc.add({0, 0}, {0, 0, 0}, f->one());
        for (int i = 0; i < k.first; ++i) acc = acc.mul(dx);
        for (int i = 0; i < k.second; ++i) acc = acc.mul(dy);
        for (const auto& [kk, cc] : acc.terms) res.add(kk.first, kk.second, c * cc);
    }
    return res;
}

}  // namespace detail

/// Independent route to the same action: h^L[m] = m_(1) <h, f_(2)>.
inline PlaneElement act_via_coaction(const HElement& h, const PlaneElement& m) {
    detail::MFTensor dm = detail::coaction(m);
    PlaneElement out(m.field());
    for (const auto& [k, c] : dm.terms) {
        CycScalar v = pair(h, FElement::monomial(m.field(), k.second[0],
                                                 k.second[1], k.second[2]));
        out.add_term(k.first.first, k.first.second, c * v);
    }
    return out;
}

/// h[m1 m2] = sum h_(1)[m1] h_(2)[m2] (module-algebra compatibility).
inline bool check_module_algebra(const HElement& h, const PlaneElement& m1,
                                 const PlaneElement& m2) {
    PlaneElement lhs = act(h, m1 * m2);
    PlaneElement rhs(m1.field());
    HTensor dh = h_coproduct(h);
    for (const auto& [legs, c] : dh.terms()) {
        HElement h1 = HElement::monomial(h.field(), legs.first[0],
                                         legs.first[1], legs.first[2]);
        HElement h2 = HElement::monomial(h.field(), legs.second[0],
                                         legs.second[1], legs.second[2]);
        rhs += c * (act(h1, m1) * act(h2, m2));
    }
    return lhs == rhs;
}

}  // namespace qplane
