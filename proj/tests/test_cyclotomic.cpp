#include <qplane/cyclotomic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace qplane;

TEST_CASE("cyclotomic polynomial and field degree", "[cyclotomic]") {
    CHECK(CycField::make(3)->degree() == 2);
    CHECK(CycField::make(5)->degree() == 4);
    CHECK(CycField::make(7)->degree() == 6);
    CHECK(CycField::make(9)->degree() == 6);  // phi(9) = 6

    // Phi_3 = 1 + t + t^2
    CycFieldPtr f3 = CycField::make(3);
    const detail::Poly& phi3 = f3->modulus();
    REQUIRE(phi3.size() == 3);
    CHECK(phi3[0] == 1);
    CHECK(phi3[1] == 1);
    CHECK(phi3[2] == 1);

    CHECK_THROWS_AS(CycField::make(4), std::invalid_argument);
    CHECK_THROWS_AS(CycField::make(1), std::invalid_argument);
}

TEST_CASE("q is a primitive N-th root of unity", "[cyclotomic]") {
    for (int n : {3, 5, 7}) {
        CycFieldPtr f = CycField::make(n);
        CHECK(f->q().pow(n) == f->one());
        for (int k = 1; k < n; ++k) CHECK(f->q().pow(k) != f->one());
        // negative exponents wrap
        CHECK(f->q_power(-1) == f->q_power(n - 1));
        CHECK(f->q_power(-1) * f->q() == f->one());
    }
}

TEST_CASE("field arithmetic is exact", "[cyclotomic]") {
    std::mt19937 rng(1u);
    for (int n : {3, 5, 7}) {
        CycFieldPtr f = CycField::make(n);
        for (int trial = 0; trial < 50; ++trial) {
            CycScalar a = testing::random_scalar(f, rng);
            CycScalar b = testing::random_scalar(f, rng);
            CycScalar c = testing::random_scalar(f, rng);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == f->one());
                CHECK(a.pow(-2) == (a * a).inv());
            }
        }
    }
}

TEST_CASE("q_bracket values", "[cyclotomic]") {
    for (int n : {3, 5, 7}) {
        CycFieldPtr f = CycField::make(n);
        CHECK(f->q_bracket(0).is_zero());
        CHECK(f->q_bracket(1) == f->one());
        CHECK(f->q_bracket(n).is_zero());  // the sum over a full period
        // geometric-series closed form away from the degenerate cases
        CycScalar r = f->q_power(-2);
        for (long k = 1; k < n; ++k)
            CHECK(f->q_bracket(k) * (f->one() - r) ==
                  f->one() - r.pow(k));
    }
}

TEST_CASE("canonical scalar text", "[cyclotomic]") {
    CycFieldPtr f = CycField::make(3);
    CHECK(f->zero().str() == "0");
    CHECK(f->one().str() == "1");
    CHECK((f->one() + f->q()).str() == "1 + q");
    CHECK(f->q_power(2).str() == "-1 - q");
    CHECK(f->from_rational(Rational(1, 2)).str() == "1/2");
    CHECK((f->from_rational(Rational(1, 2)) + f->from_int(3) * f->q() -
           f->q() * f->q())
              .str() == "3/2 + 4*q");  // q^2 = -1 - q folds into low degrees
    CycFieldPtr f5 = CycField::make(5);
    CHECK((f5->from_rational(Rational(1, 2)) + f5->from_int(3) * f5->q() -
           f5->q_power(2))
              .str() == "1/2 + 3*q - q^2");
}

TEST_CASE("reduction of high powers", "[cyclotomic]") {
    CycFieldPtr f = CycField::make(5);
    // t^9 mod Phi_5 must equal q^9 = q^4
    std::vector<Rational> c(10, Rational(0));
    c[9] = 1;
    CHECK(CycScalar(f, f->reduce(c)) == f->q_power(4));
}
