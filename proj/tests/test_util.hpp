#pragma once

// Shared helpers for the test suites: deterministic random elements of the
// four algebras with small integer coefficients.

#include <qplane/dual.hpp>
#include <qplane/plane.hpp>
#include <qplane/wess_zumino.hpp>

#include <random>

namespace qplane::testing {

inline CycScalar random_scalar(const CycFieldPtr& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> power(0, f->n() - 1);
    return f->from_int(coef(rng)) * f->q_power(power(rng)) +
           f->from_int(coef(rng));
}

inline PlaneElement random_plane(const CycFieldPtr& f, std::mt19937& rng,
                                 int nterms = 3) {
    std::uniform_int_distribution<int> e(0, f->n() - 1);
    PlaneElement u(f);
    for (int i = 0; i < nterms; ++i)
        u.add_term(e(rng), e(rng), random_scalar(f, rng));
    return u;
}

inline HElement random_hopf(const CycFieldPtr& f, std::mt19937& rng,
                            int nterms = 3) {
    std::uniform_int_distribution<int> e(0, f->n() - 1);
    std::uniform_int_distribution<int> nil(0, 2);
    HElement u(f);
    for (int i = 0; i < nterms; ++i)
        u.add_term(e(rng), nil(rng), nil(rng), random_scalar(f, rng));
    return u;
}

inline FElement random_dual(const CycFieldPtr& f, std::mt19937& rng,
                            int nterms = 3) {
    std::uniform_int_distribution<int> e(0, f->n() - 1);
    std::uniform_int_distribution<int> nil(0, 2);
    FElement u(f);
    for (int i = 0; i < nterms; ++i)
        u.add_term(e(rng), nil(rng), nil(rng), random_scalar(f, rng));
    return u;
}

inline WZForm random_form(const CycFieldPtr& f, std::mt19937& rng,
                          int nterms = 3) {
    std::uniform_int_distribution<int> e(0, f->n() - 1);
    std::uniform_int_distribution<int> word(0, 3);
    WZForm u(f);
    for (int i = 0; i < nterms; ++i)
        u.component(static_cast<WZForm::Word>(word(rng)))
            .add_term(e(rng), e(rng), random_scalar(f, rng));
    return u;
}

}  // namespace qplane::testing
