#include <qplane/dual.hpp>
#include <qplane/matrix.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace qplane;

TEST_CASE("F defining relations", "[dual]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        FElement a = FElement::a(f), b = FElement::b(f), c = FElement::c(f);
        CHECK(b * a == f->q_power(-1) * (a * b));
        CHECK(c * a == f->q_power(-1) * (a * c));
        CHECK(b * c == c * b);
        CHECK(a.pow(n) == FElement::one(f));
        CHECK(b.pow(n).is_zero());
        CHECK(c.pow(n).is_zero());
    }
}

TEST_CASE("d is eliminated through a^(N-1)(1 + q b c)", "[dual]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        FElement d = FElement::d(f);
        CHECK(d == FElement::monomial(f, n - 1, 0, 0) +
                       f->q() * FElement::monomial(f, n - 1, 1, 1));
        // quantum determinant: a d - q b c = 1 in the quotient
        CHECK(FElement::a(f) * d -
                  f->q() * (FElement::b(f) * FElement::c(f)) ==
              FElement::one(f));
        // the two products of a and d, in normal form
        CHECK(FElement::a(f) * d ==
              FElement::one(f) +
                  f->q() * (FElement::b(f) * FElement::c(f)));
        CHECK(d * FElement::a(f) ==
              FElement::one(f) +
                  f->q_power(-1) * (FElement::b(f) * FElement::c(f)));
    }
}

TEST_CASE("pairing generator table", "[dual]") {
    CycFieldPtr f = CycField::make(3);
    HElement K = HElement::k(f), Xp = HElement::x_plus(f),
             Xm = HElement::x_minus(f), one = HElement::one(f);
    FElement a = FElement::a(f), b = FElement::b(f), c = FElement::c(f),
             d = FElement::d(f);
    CHECK(pair(K, a) == f->q());
    CHECK(pair(K, d) == f->q_power(-1));
    CHECK(pair(K, b).is_zero());
    CHECK(pair(K, c).is_zero());
    CHECK(pair(Xp, b) == f->one());
    CHECK(pair(Xp, a).is_zero());
    CHECK(pair(Xm, c) == f->one());
    CHECK(pair(one, a) == f->one());
    CHECK(pair(one, d) == f->one());
    CHECK(pair(one, b).is_zero());
}

TEST_CASE("pairing Gram matrix is nondegenerate at N = 3", "[dual]") {
    CycFieldPtr f = CycField::make(3);
    const int d = 27;
    CycMatrix gram(f, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            HElement h = HElement::monomial(f, i / 9, (i / 3) % 3, i % 3);
            FElement ff = FElement::monomial(f, j / 9, (j / 3) % 3, j % 3);
            gram.at(i, j) = pair(h, ff);
        }
    CHECK(gram.rank() == d);
}

TEST_CASE("pairing exchanges product and coproduct", "[dual]") {
    std::mt19937 rng(7u);
    CycFieldPtr f = CycField::make(3);
    for (int trial = 0; trial < 25; ++trial) {
        HElement h = testing::random_hopf(f, rng, 2);
        FElement f1 = testing::random_dual(f, rng, 2);
        FElement f2 = testing::random_dual(f, rng, 2);
        CycScalar lhs = pair(h, f1 * f2);
        CycScalar rhs = f->zero();
        HTensor dh = h_coproduct(h);
        for (const auto& [legs, c] : dh.terms())
            rhs += c *
                   pair(HElement::monomial(f, legs.first[0], legs.first[1],
                                           legs.first[2]),
                        f1) *
                   pair(HElement::monomial(f, legs.second[0], legs.second[1],
                                           legs.second[2]),
                        f2);
        CHECK(lhs == rhs);

        HElement h2 = testing::random_hopf(f, rng, 2);
        CycScalar lhs2 = pair(h * h2, f1);
        CycScalar rhs2 = f->zero();
        FTensor df1 = f_coproduct(f1);
        for (const auto& [legs, c] : df1.terms())
            rhs2 += c *
                    pair(h, FElement::monomial(f, legs.first[0],
                                               legs.first[1], legs.first[2])) *
                    pair(h2, FElement::monomial(f, legs.second[0],
                                                legs.second[1],
                                                legs.second[2]));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("left and right actions are pairing-adjoint, exhaustive N = 3",
          "[dual]") {
    CycFieldPtr f = CycField::make(3);
    std::vector<HElement> hs;
    std::vector<FElement> fs;
    for (int i = 0; i < 27; ++i) {
        hs.push_back(HElement::monomial(f, i / 9, (i / 3) % 3, i % 3));
        fs.push_back(FElement::monomial(f, i / 9, (i / 3) % 3, i % 3));
    }
    for (const HElement& h : hs)
        for (const FElement& ff : fs) {
            FElement left = h_act_on_f(h, ff, Side::left);
            FElement right = h_act_on_f(h, ff, Side::right);
            bool ok = true;
            for (const HElement& y : hs) {
                ok &= pair(y, left) == pair(y * h, ff);
                ok &= pair(y, right) == pair(h * y, ff);
            }
            CHECK(ok);
        }
}
