#include <doctest.h>

#include "multielim/field.hpp"
#include "multielim/rng.hpp"

using namespace multielim;

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    Rational a(22, 7), b(-5);
    CHECK((a * b) / b == a);
    CHECK((Rational(3, 4) + Rational(1, 4)).str() == "1");
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(), std::domain_error);
}

TEST_CASE("prime field basics") {
    CHECK(Fp(3, 7).inverse() == Fp(5, 7));
    CHECK(Fp::from_int(-1, 7) == Fp(6, 7));
    CHECK((Fp(3, 7) * Fp(5, 7)) == Fp(1, 7));
    CHECK_THROWS_AS(Fp(0, 7).inverse(), std::domain_error);
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
    Rng rng(42);
    const std::uint64_t p = kDefaultPrime;
    for (int t = 0; t < 25; ++t) {
        Fp a(rng.below(p), p), b(rng.below(p), p), c(rng.below(p), p);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Fp(1, p));

        Rational qa(static_cast<long>(rng.range(-50, 50)), static_cast<long>(rng.range(1, 50)));
        Rational qb(static_cast<long>(rng.range(-50, 50)), static_cast<long>(rng.range(1, 50)));
        Rational qc(static_cast<long>(rng.range(-50, 50)), static_cast<long>(rng.range(1, 50)));
        CHECK((qa + qb) + qc == qa + (qb + qc));
        CHECK(qa * (qb + qc) == qa * qb + qa * qc);
    }
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("Q").rational);
    const FieldSpec f = FieldSpec::parse("Fp:2147483647");
    CHECK_FALSE(f.rational);
    CHECK(f.p == 2147483647ULL);
    CHECK_THROWS_AS(FieldSpec::parse("GF(7)"), std::invalid_argument);
}
